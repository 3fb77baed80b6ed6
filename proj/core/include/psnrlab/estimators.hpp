// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "psnrlab/mse.hpp"

namespace psnrlab {

// What to do when a geometric-mean path meets an MSE of exactly zero (a
// perfect reconstruction makes the mean-of-PSNR estimator infinite):
// refuse, or substitute a tiny floor and flag a warning.
enum class ZeroMsePolicy { error, floor };

// The floor substituted under ZeroMsePolicy::floor: 2^-52 in the unit-float
// domain, scaled by peak^2 for other domains.
double zero_mse_floor(double peak);

// The two single-video aggregation options: mean of per-frame PSNRs, or
// PSNR of the mean frame MSE (the default reported value).
enum class VideoPsnrOption { mean_frame_psnr, psnr_of_mean_frame_mse };

// PSNR-1 pooling when videos have unequal frame counts: every frame weighted
// equally (the default), or every video weighted equally.
enum class Psnr1Weighting { pooled_frames, per_video };

// PSNR-3 averaging: per-video MSEs weighted equally (the default), or
// pooled over frames (frame-count weighted).
enum class Psnr3Weighting { per_video, pooled_frames };

// 10 * log10(peak^2 / mse); +inf when mse == 0 (rendered "inf" in reports).
double psnr(double mse, double peak);

// Mean of per-item PSNRs. Equals the PSNR of the geometric mean of the
// MSEs and is computed that way, through the mean of log-MSE, so a list of
// 10^6 entries neither overflows nor underflows. Zero entries follow the
// policy: ZeroMseError listing the offending indices, or floor + flag.
double psnr_bar(std::span<const double> mses, double peak,
                ZeroMsePolicy policy = ZeroMsePolicy::error,
                bool* floored = nullptr);

// PSNR of the arithmetic-mean MSE. An all-zero list yields +inf.
double psnr_of_mean_mse(std::span<const double> mses, double peak);

// The Jensen gap between the two set estimators, 10 * log10(AM / GM) of
// the MSE list, computed in the log domain and clamped at 0. `peak` only
// scales the zero floor.
double estimator_gap(std::span<const double> mses, double peak = 1.0,
                     ZeroMsePolicy policy = ZeroMsePolicy::error,
                     bool* floored = nullptr);

// Descriptive mean of per-item PSNRs that never throws: +inf when any MSE
// is zero. Used for report fields; the estimators above enforce policy.
double mean_psnr_with_inf(std::span<const double> mses, double peak);

// Both set-level estimates side by side plus sample statistics of the MSE
// list. mse_std uses the 1/(N-1) divisor and is NaN for a single item.
struct SetEstimate {
  std::size_t n_items = 0;
  double psnr_bar_db = 0.0;
  double psnr_of_mean_mse_db = 0.0;
  double gap_db = 0.0;
  double mse_mean = 0.0;
  double mse_std = 0.0;
  double mse_cv = 0.0;
  bool zero_mse_floored = false;
};

SetEstimate set_estimate(std::span<const double> mses, double peak,
                         ZeroMsePolicy policy = ZeroMsePolicy::error);

double video_psnr(const VideoMse& v, VideoPsnrOption option, double peak,
                  ZeroMsePolicy policy = ZeroMsePolicy::error);

// The three video-set aggregations:
//   PSNR-1: mean PSNR over frames pooled across videos
//   PSNR-2: mean over videos of the per-video PSNR (from mean frame MSE)
//   PSNR-3: PSNR of the mean of per-video MSEs
// With equal frame counts psnr1 >= psnr2 >= psnr3; psnr2 >= psnr3 always.
struct VideoSetEstimate {
  double psnr1_db = 0.0;
  double psnr2_db = 0.0;
  double psnr3_db = 0.0;
  std::vector<std::size_t> frame_counts;
  bool equal_frame_counts = true;
  bool zero_mse_floored = false;
  Psnr1Weighting psnr1_weighting = Psnr1Weighting::pooled_frames;
  Psnr3Weighting psnr3_weighting = Psnr3Weighting::per_video;
};

VideoSetEstimate video_set_psnrs(const std::vector<VideoMse>& videos,
                                 double peak,
                                 ZeroMsePolicy policy = ZeroMsePolicy::error,
                                 Psnr1Weighting w1 = Psnr1Weighting::pooled_frames,
                                 Psnr3Weighting w3 = Psnr3Weighting::per_video);

} // namespace psnrlab
