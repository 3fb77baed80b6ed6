// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "psnrlab/pixel_ops.hpp"

namespace psnrlab {

// One per-item MSE measurement with its provenance.
struct MseRecord {
  std::string item_id;
  std::optional<std::string> video_id;
  double mse = 0.0;            // squared sample units of the canonical range
  std::size_t pixel_count = 0; // K: samples summed over all channels
  ChannelMode channel_mode = ChannelMode::y_bt601_studio;
  Quantization quantization = Quantization::uint8;
  int width = 0; // canonical geometry, kept for resolution warnings
  int height = 0;
};

// Ordered frame MSEs of one video plus the video-level aggregates. Both
// single-video PSNR variants are carried: PSNR of the mean frame MSE and
// the mean of per-frame PSNRs (+inf when any frame is perfect).
struct VideoMse {
  std::string video_id;
  std::vector<double> frame_mses;
  double video_mse = 0.0;          // arithmetic mean of frame_mses
  double psnr_from_mean_mse = 0.0; // dB
  double mean_of_frame_psnrs = 0.0; // dB
  std::size_t pixel_count = 0;
};

// (1/K) * sum of squared differences over every sample of every channel,
// K counting samples across channels (3*W*H for RGB). Accumulation is
// Neumaier-compensated over fixed 4096-sample chunks; chunk partials
// combine in index order, so the value is bit-identical for any worker
// count and any traversal partitioning.
MseRecord mse(const CanonicalPair& pair, unsigned workers = 1);

// Folds the ordered frame records of one video. All records must share
// video_id and pixel_count; the list must be non-empty.
VideoMse video_mse(const std::vector<MseRecord>& frames, double peak);

} // namespace psnrlab
