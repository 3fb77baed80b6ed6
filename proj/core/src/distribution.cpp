// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "psnrlab/error.hpp"
#include "psnrlab/estimators.hpp"
#include "psnrlab/parallel.hpp"
#include "psnrlab/rng.hpp"
#include "psnrlab/summation.hpp"

namespace psnrlab {

namespace {

// Linear-interpolation quantile (the common "type 7"), xs sorted ascending.
double quantile_sorted(const std::vector<double>& xs, double p) {
  const double h = p * static_cast<double>(xs.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= xs.size()) {
    return xs.back();
  }
  const double frac = h - static_cast<double>(lo);
  return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

std::vector<HistogramBin> build_histogram(const std::vector<double>& sorted,
                                          int bins_override) {
  const double lo = sorted.front();
  const double hi = sorted.back();
  const std::size_t n = sorted.size();

  std::size_t bins = 1;
  if (bins_override > 0) {
    bins = static_cast<std::size_t>(bins_override);
  } else if (hi > lo) {
    const double iqr =
        quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    if (iqr > 0.0) {
      // Freedman-Diaconis width 2 * IQR / n^(1/3).
      const double width = 2.0 * iqr / std::cbrt(static_cast<double>(n));
      bins = static_cast<std::size_t>(std::ceil((hi - lo) / width));
      bins = std::max<std::size_t>(bins, 1);
    }
  }

  // Shared edges make adjacent bins contiguous by construction; the last
  // bin is closed so the maximum is always assigned.
  std::vector<double> edges(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) {
    edges[k] = lo + (hi - lo) * (static_cast<double>(k) / static_cast<double>(bins));
  }
  edges.front() = lo;
  edges.back() = hi;

  std::vector<HistogramBin> out(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    out[k].lower = edges[k];
    out[k].upper = edges[k + 1];
  }
  for (double x : sorted) {
    auto it = std::upper_bound(edges.begin() + 1, edges.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - (edges.begin() + 1));
    if (idx >= bins) {
      idx = bins - 1;
    }
    ++out[idx].count;
  }
  return out;
}

double ks_against_exponential(const std::vector<double>& sorted, double lambda) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    // Model CDF F(x) = 1 - exp(-lambda x).
    const double f = -std::expm1(-lambda * sorted[i]);
    const double d_plus = (static_cast<double>(i) + 1.0) / n - f;
    const double d_minus = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(d_plus, d_minus));
  }
  return d;
}

} // namespace

double predicted_gap_db() {
  // 17-significant-digit literal; the limit definition of the constant
  // converges far too slowly to evaluate instead.
  constexpr double kEulerMascheroni = 0.57721566490153286;
  return 10.0 * kEulerMascheroni / std::numbers::ln10;
}

DistributionAudit audit(std::span<const double> mses, int hist_bins_override) {
  if (mses.size() < 2) {
    throw Error("audit: sample standard deviation undefined for n = " +
                std::to_string(mses.size()) + " (need n >= 2)");
  }
  for (std::size_t i = 0; i < mses.size(); ++i) {
    if (!(mses[i] > 0.0)) {
      throw Error("audit: entry " + std::to_string(i) + " is " +
                  std::to_string(mses[i]) +
                  "; the exponential model needs positive values");
    }
  }

  DistributionAudit a;
  a.n = mses.size();
  a.mean = compensated_mean(mses);
  CompensatedSum sq;
  CompensatedSum logs;
  for (double m : mses) {
    const double d = m - a.mean;
    sq.add(d * d);
    logs.add(std::log(m));
  }
  a.variance = sq.value() / static_cast<double>(a.n - 1);
  a.stddev = std::sqrt(a.variance);
  a.cv = a.stddev / a.mean;
  a.lambda_hat = 1.0 / a.mean;
  a.geometric_mean = std::exp(logs.value() / static_cast<double>(a.n));
  a.observed_gap_db = estimator_gap(mses);
  a.predicted_gap_db = predicted_gap_db();

  std::vector<double> sorted(mses.begin(), mses.end());
  std::sort(sorted.begin(), sorted.end());
  a.ks_statistic = ks_against_exponential(sorted, a.lambda_hat);
  a.histogram = build_histogram(sorted, hist_bins_override);
  return a;
}

SimResult simulate_gap(const SimConfig& cfg) {
  if (cfg.n_samples < 1) {
    throw Error("simulate_gap: n_samples must be >= 1");
  }
  if (!(cfg.lambda > 0.0)) {
    throw Error("simulate_gap: lambda must be positive");
  }
  if (cfg.n_trials < 1) {
    throw Error("simulate_gap: n_trials must be >= 1");
  }

  SimResult res;
  res.config = cfg;
  res.gaps_db.resize(cfg.n_trials);
  res.predicted_gap_db = predicted_gap_db();

  parallel_for(cfg.n_trials, cfg.threads, [&](std::size_t trial) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, trial);
    CompensatedSum sum;
    CompensatedSum sum_log10;
    for (std::size_t i = 0; i < cfg.n_samples; ++i) {
      const double x = exponential_draw(rng, cfg.lambda);
      sum.add(x);
      sum_log10.add(std::log10(x));
    }
    const double n = static_cast<double>(cfg.n_samples);
    const double am = sum.value() / n;
    const double mean_log = sum_log10.value() / n;
    res.gaps_db[trial] = std::max(0.0, 10.0 * (std::log10(am) - mean_log));
  });

  res.gap_mean_db = compensated_mean(res.gaps_db);
  if (cfg.n_trials < 2) {
    res.gap_std_db = std::numeric_limits<double>::quiet_NaN();
  } else {
    CompensatedSum sq;
    for (double g : res.gaps_db) {
      const double d = g - res.gap_mean_db;
      sq.add(d * d);
    }
    res.gap_std_db =
        std::sqrt(sq.value() / static_cast<double>(cfg.n_trials - 1));
  }
  return res;
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::string out = "bin_lower,bin_upper,count\n";
  char line[96];
  for (const HistogramBin& b : bins) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g,%zu\n", b.lower, b.upper,
                  b.count);
    out += line;
  }
  return out;
}

} // namespace psnrlab
