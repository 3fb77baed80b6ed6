// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/estimators.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "psnrlab/error.hpp"
#include "psnrlab/summation.hpp"

namespace psnrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Every estimator is 10*log10(peak^2) - 10*L with L a mean of log10-MSEs or
// the log10 of a mean MSE. Funneling all of them through the same two
// helpers keeps the algebraic collapses (N = 1, equal lists, single video)
// exact instead of merely close.
double db_of_peak(double peak) { return 10.0 * std::log10(peak * peak); }

double db_from_log10(double db_peak, double log10_mse) {
  return db_peak - 10.0 * log10_mse;
}

void check_nonnegative(std::span<const double> mses) {
  for (std::size_t i = 0; i < mses.size(); ++i) {
    if (mses[i] < 0.0 || std::isnan(mses[i])) {
      throw Error("mse list entry " + std::to_string(i) + " is " +
                  std::to_string(mses[i]) + "; MSE must be nonnegative");
    }
  }
}

void check_nonempty(std::span<const double> mses, const char* who) {
  if (mses.empty()) {
    throw Error(std::string(who) + ": empty MSE list");
  }
}

// Mean of log10(mse) with the zero policy applied. The only path that can
// observe a zero: geometric-mean estimators.
double mean_log10(std::span<const double> mses, double peak,
                  ZeroMsePolicy policy, bool* floored) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < mses.size(); ++i) {
    if (mses[i] == 0.0) {
      zeros.push_back(i);
    }
  }
  if (!zeros.empty()) {
    if (policy == ZeroMsePolicy::error) {
      std::string msg = "mean-of-PSNR is undefined: zero MSE at index";
      msg += zeros.size() > 1 ? "es " : " ";
      for (std::size_t k = 0; k < zeros.size(); ++k) {
        msg += (k ? ", " : "") + std::to_string(zeros[k]);
      }
      msg += " (use the zero-MSE floor policy to substitute a floor)";
      throw ZeroMseError(msg, std::move(zeros));
    }
    if (floored) {
      *floored = true;
    }
  }
  const double floor_value = zero_mse_floor(peak);
  CompensatedSum acc;
  for (double m : mses) {
    acc.add(std::log10(m == 0.0 ? floor_value : m));
  }
  return acc.value() / static_cast<double>(mses.size());
}

// Arithmetic mean with the same floor substitution (used by the gap so that
// both means describe the same list).
double mean_floored(std::span<const double> mses, double peak) {
  const double floor_value = zero_mse_floor(peak);
  CompensatedSum acc;
  for (double m : mses) {
    acc.add(m == 0.0 ? floor_value : m);
  }
  return acc.value() / static_cast<double>(mses.size());
}

} // namespace

double zero_mse_floor(double peak) { return peak * peak * 0x1.0p-52; }

double psnr(double mse, double peak) {
  if (mse < 0.0 || !(peak > 0.0)) {
    throw Error("psnr: requires mse >= 0 and peak > 0");
  }
  if (mse == 0.0) {
    return kInf;
  }
  return db_from_log10(db_of_peak(peak), std::log10(mse));
}

double psnr_bar(std::span<const double> mses, double peak, ZeroMsePolicy policy,
                bool* floored) {
  check_nonempty(mses, "psnr_bar");
  check_nonnegative(mses);
  return db_from_log10(db_of_peak(peak), mean_log10(mses, peak, policy, floored));
}

double psnr_of_mean_mse(std::span<const double> mses, double peak) {
  check_nonempty(mses, "psnr_of_mean_mse");
  check_nonnegative(mses);
  const double am = compensated_mean(mses);
  if (am == 0.0) {
    return kInf;
  }
  return db_from_log10(db_of_peak(peak), std::log10(am));
}

double estimator_gap(std::span<const double> mses, double peak,
                     ZeroMsePolicy policy, bool* floored) {
  check_nonempty(mses, "estimator_gap");
  check_nonnegative(mses);
  const double ml = mean_log10(mses, peak, policy, floored);
  const double am = mean_floored(mses, peak);
  // AM >= GM; anything below zero is floating-point noise.
  return std::max(0.0, 10.0 * (std::log10(am) - ml));
}

double mean_psnr_with_inf(std::span<const double> mses, double peak) {
  check_nonempty(mses, "mean_psnr_with_inf");
  check_nonnegative(mses);
  for (double m : mses) {
    if (m == 0.0) {
      return kInf;
    }
  }
  bool floored = false;
  return db_from_log10(db_of_peak(peak),
                       mean_log10(mses, peak, ZeroMsePolicy::error, &floored));
}

SetEstimate set_estimate(std::span<const double> mses, double peak,
                         ZeroMsePolicy policy) {
  check_nonempty(mses, "set_estimate");
  check_nonnegative(mses);

  SetEstimate est;
  est.n_items = mses.size();
  est.psnr_bar_db = psnr_bar(mses, peak, policy, &est.zero_mse_floored);
  est.psnr_of_mean_mse_db = psnr_of_mean_mse(mses, peak);
  est.gap_db = estimator_gap(mses, peak, policy, nullptr);

  // Statistics describe the raw measurements, not the floored list.
  est.mse_mean = compensated_mean(mses);
  if (mses.size() < 2) {
    est.mse_std = std::numeric_limits<double>::quiet_NaN();
    est.mse_cv = std::numeric_limits<double>::quiet_NaN();
  } else {
    CompensatedSum sq;
    for (double m : mses) {
      const double d = m - est.mse_mean;
      sq.add(d * d);
    }
    est.mse_std = std::sqrt(sq.value() / static_cast<double>(mses.size() - 1));
    est.mse_cv = est.mse_std / est.mse_mean;
  }
  return est;
}

double video_psnr(const VideoMse& v, VideoPsnrOption option, double peak,
                  ZeroMsePolicy policy) {
  if (v.frame_mses.empty()) {
    throw Error("video_psnr: video \"" + v.video_id + "\" has no frames");
  }
  if (option == VideoPsnrOption::mean_frame_psnr) {
    return psnr_bar(v.frame_mses, peak, policy, nullptr);
  }
  return psnr(v.video_mse, peak);
}

VideoSetEstimate video_set_psnrs(const std::vector<VideoMse>& videos,
                                 double peak, ZeroMsePolicy policy,
                                 Psnr1Weighting w1, Psnr3Weighting w3) {
  if (videos.empty()) {
    throw Error("video_set_psnrs: empty video list");
  }
  VideoSetEstimate est;
  est.psnr1_weighting = w1;
  est.psnr3_weighting = w3;

  std::vector<double> pooled;
  std::vector<double> video_mses;
  video_mses.reserve(videos.size());
  for (const VideoMse& v : videos) {
    if (v.frame_mses.empty()) {
      throw Error("video_set_psnrs: video \"" + v.video_id + "\" has no frames");
    }
    est.frame_counts.push_back(v.frame_mses.size());
    pooled.insert(pooled.end(), v.frame_mses.begin(), v.frame_mses.end());
    video_mses.push_back(v.video_mse);
  }
  for (std::size_t c : est.frame_counts) {
    if (c != est.frame_counts.front()) {
      est.equal_frame_counts = false;
    }
  }
  check_nonnegative(pooled);

  const double dbp = db_of_peak(peak);

  if (w1 == Psnr1Weighting::pooled_frames) {
    est.psnr1_db = db_from_log10(
        dbp, mean_log10(pooled, peak, policy, &est.zero_mse_floored));
  } else {
    CompensatedSum per_video;
    for (const VideoMse& v : videos) {
      per_video.add(mean_log10(v.frame_mses, peak, policy, &est.zero_mse_floored));
    }
    est.psnr1_db = db_from_log10(
        dbp, per_video.value() / static_cast<double>(videos.size()));
  }

  est.psnr2_db = db_from_log10(
      dbp, mean_log10(video_mses, peak, policy, &est.zero_mse_floored));

  const std::span<const double> psnr3_list =
      w3 == Psnr3Weighting::per_video ? std::span<const double>(video_mses)
                                      : std::span<const double>(pooled);
  const double am = compensated_mean(psnr3_list);
  est.psnr3_db = am == 0.0 ? std::numeric_limits<double>::infinity()
                           : db_from_log10(dbp, std::log10(am));
  return est;
}

} // namespace psnrlab
