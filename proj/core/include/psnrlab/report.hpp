// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psnrlab/distribution.hpp"
#include "psnrlab/estimators.hpp"
#include "psnrlab/manifest.hpp"
#include "psnrlab/mse.hpp"

namespace psnrlab {

enum class ReportFormat { json, csv };

// Knobs the CLI exposes. Optional fields override the manifest when set.
struct RunOptions {
  std::optional<ChannelMode> channel_mode;
  std::optional<Quantization> quantization;
  std::optional<bool> clamp;
  ZeroMsePolicy zero_mse = ZeroMsePolicy::error;
  VideoPsnrOption video_psnr = VideoPsnrOption::psnr_of_mean_frame_mse;
  Psnr1Weighting psnr1_weighting = Psnr1Weighting::pooled_frames;
  Psnr3Weighting psnr3_weighting = Psnr3Weighting::per_video;
  bool strict = false;
  int hist_bins = 0;    // 0: Freedman-Diaconis
  unsigned threads = 0; // 0: hardware concurrency; never changes the numbers
  double analyze_peak = 1.0;
};

// Echo of everything that determined the numbers in a report.
struct ReportConfig {
  std::string mode; // image_set | single_video | video_set | simulate | analyze
  std::optional<ChannelMode> channel_mode; // media modes only
  std::optional<Quantization> quantization;
  std::optional<bool> clamp;
  double peak = 1.0;
  ZeroMsePolicy zero_mse = ZeroMsePolicy::error;
  VideoPsnrOption video_psnr = VideoPsnrOption::psnr_of_mean_frame_mse;
  Psnr1Weighting psnr1_weighting = Psnr1Weighting::pooled_frames;
  Psnr3Weighting psnr3_weighting = Psnr3Weighting::per_video;
  int hist_bins = 0;
  std::optional<SimConfig> sim; // simulate mode only
};

struct ReportItem {
  std::string id;
  std::optional<std::string> video;
  double mse = 0.0;
  double psnr_db = 0.0; // +inf for identical pairs
  std::size_t pixel_count = 0;
  int width = 0; // not serialized; drives resolution warnings
  int height = 0;
};

struct ReportVideo {
  std::string id;
  std::size_t frames = 0;
  double video_mse = 0.0;
  double psnr_mean_mse_db = 0.0;  // PSNR of the mean frame MSE
  double psnr_mean_psnr_db = 0.0; // mean of per-frame PSNRs
  double psnr_db = 0.0;           // whichever option the config selects
};

struct Report {
  ReportConfig config;
  std::vector<ReportItem> items;
  std::vector<ReportVideo> videos;
  std::optional<SetEstimate> set;
  std::optional<VideoSetEstimate> video_set;
  std::optional<DistributionAudit> audit;
  std::optional<SimResult> simulate;
  std::vector<std::string> warnings;
};

// Decodes every pair named by the manifest, canonicalizes, computes MSE per
// item in manifest order, and assembles all estimates that apply to the
// manifest's mode. Per-item work may run on opts.threads workers; output is
// byte-identical regardless.
Report run(const Manifest& manifest, const RunOptions& opts);
Report run(const std::filesystem::path& manifest_path, const RunOptions& opts);

// A bare MSE list: one nonnegative real per line, optional second column a
// video id, '#' comments allowed. PSNRs use opts.analyze_peak.
Report analyze_mse_text(const std::string& text, const RunOptions& opts);
Report analyze_mse_list(const std::filesystem::path& list_path,
                        const RunOptions& opts);

Report simulate_report(const SimConfig& cfg, const RunOptions& opts);

// Warning when items pool different spatial resolutions. In video modes the
// caution concerns the cross-video pooling (PSNR-1/PSNR-3) only; within a
// video mixed geometry is a hard error upstream.
std::optional<std::string> warn_mixed_resolution(std::span<const ReportItem> items,
                                                 bool video_mode);

// Deterministic rendering: identical Report -> identical bytes. JSON keeps
// full double precision (values round-trip exactly); CSV renders dB with 6
// decimals. Non-finite values appear as "inf"/"-inf" strings and NaN as
// null/empty.
std::string emit(const Report& report, ReportFormat format);

} // namespace psnrlab
