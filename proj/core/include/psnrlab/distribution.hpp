// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace psnrlab {

struct HistogramBin {
  double lower = 0.0;
  double upper = 0.0;
  std::size_t count = 0;
};

// Summary of how an MSE sample compares against the exponential model:
// moments, the MLE rate, the observed arithmetic/geometric gap, the
// model-predicted limit of that gap, a Kolmogorov-Smirnov distance against
// Exp(lambda_hat) (descriptive only; the rate is estimated from the same
// sample), and a histogram.
struct DistributionAudit {
  std::size_t n = 0;
  double mean = 0.0;
  double stddev = 0.0; // 1/(N-1) divisor
  double variance = 0.0;
  double cv = 0.0;         // stddev / mean; ~1 flags an exponential-like sample
  double lambda_hat = 0.0; // 1 / mean
  double geometric_mean = 0.0;
  double observed_gap_db = 0.0;
  double predicted_gap_db = 0.0;
  double ks_statistic = 0.0;
  std::vector<HistogramBin> histogram;
};

struct SimConfig {
  std::size_t n_samples = 0;
  double lambda = 1.0;
  std::uint64_t seed = 0;
  std::size_t n_trials = 1;
  unsigned threads = 0; // 0: hardware concurrency; never affects the values
};

struct SimResult {
  SimConfig config;
  std::vector<double> gaps_db; // one per trial, in trial order
  double gap_mean_db = 0.0;
  double gap_std_db = 0.0; // NaN for a single trial
  double predicted_gap_db = 0.0;
};

// The model-predicted large-N limit of the gap between the two set
// estimators for exponentially distributed MSE: 10 * gamma / ln(10), with
// the Euler-Mascheroni constant as a 17-significant-digit literal.
double predicted_gap_db();

// Audits a positive MSE sample (n >= 2) against the exponential model.
// hist_bins_override > 0 fixes the bin count; otherwise Freedman-Diaconis
// with a single-bin fallback when the IQR collapses.
DistributionAudit audit(std::span<const double> mses, int hist_bins_override = 0);

// Draws n_samples from Exp(lambda) per trial by inverse CDF and reports the
// observed estimator gap of each trial. Each trial owns a SplitMix64 stream
// derived from (seed, trial index); output depends only on the config, not
// on thread count.
SimResult simulate_gap(const SimConfig& cfg);

// Histogram export, "bin_lower,bin_upper,count" with header.
std::string histogram_csv(const std::vector<HistogramBin>& bins);

} // namespace psnrlab
