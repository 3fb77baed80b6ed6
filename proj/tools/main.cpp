// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0
//
// psnrlab: PSNR for sets of images, single videos, and sets of videos, with
// every aggregation variant labeled, plus an exponential-model audit of the
// MSE distribution. All subcommands write the report to stdout (or --output)
// and exit nonzero on hard errors; --strict also fails on warnings.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "psnrlab/error.hpp"
#include "psnrlab/report.hpp"

namespace {

struct CliOptions {
  psnrlab::RunOptions run;
  std::string format = "json";
  std::string output;
  std::string hist_csv;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", opt.output,
                  "Write the report here instead of stdout");
  cmd->add_flag("--strict", opt.run.strict,
                "Exit nonzero when the report carries warnings");
  cmd->add_option("--threads", opt.run.threads,
                  "Worker threads (0 = hardware); never changes the numbers");
}

void add_estimator_flags(CLI::App* cmd, CliOptions& opt,
                         std::string& zero_mse, std::string& video_psnr,
                         std::string& psnr1_w, std::string& psnr3_w) {
  cmd->add_option("--zero-mse", zero_mse,
                  "Zero-MSE handling in mean-of-PSNR paths")
      ->check(CLI::IsMember({"error", "floor"}))
      ->capture_default_str();
  cmd->add_option("--video-psnr", video_psnr,
                  "Per-video PSNR: PSNR of mean frame MSE, or mean frame PSNR")
      ->check(CLI::IsMember({"mean-mse", "mean-psnr"}))
      ->capture_default_str();
  cmd->add_option("--psnr1-weighting", psnr1_w,
                  "PSNR-1 pooling when frame counts differ")
      ->check(CLI::IsMember({"frames", "videos"}))
      ->capture_default_str();
  cmd->add_option("--psnr3-weighting", psnr3_w,
                  "PSNR-3 averaging: per-video MSEs or pooled frames")
      ->check(CLI::IsMember({"videos", "frames"}))
      ->capture_default_str();
  cmd->add_option("--hist-bins", opt.run.hist_bins,
                  "Histogram bin count (0 = Freedman-Diaconis)");
}

void add_media_flags(CLI::App* cmd, std::optional<std::string>& channel_mode,
                     std::optional<std::string>& quantization,
                     std::optional<bool>& clamp) {
  cmd->add_option_function<std::string>(
         "--channel-mode",
         [&channel_mode](const std::string& v) { channel_mode = v; },
         "Channel domain for MSE (overrides the manifest)")
      ->check(CLI::IsMember({"rgb", "y601", "yfull"}));
  cmd->add_option_function<std::string>(
         "--quantization",
         [&quantization](const std::string& v) { quantization = v; },
         "Sample domain for MSE (overrides the manifest)")
      ->check(CLI::IsMember({"float01", "uint8"}));
  cmd->add_flag_function(
      "--clamp", [&clamp](std::int64_t) { clamp = true; },
      "Clamp float01 samples to [0,1] (overrides the manifest)");
}

psnrlab::ChannelMode channel_mode_from_cli(const std::string& v) {
  if (v == "rgb") {
    return psnrlab::ChannelMode::rgb;
  }
  if (v == "yfull") {
    return psnrlab::ChannelMode::y_full_range;
  }
  return psnrlab::ChannelMode::y_bt601_studio;
}

void apply_string_options(CliOptions& opt, const std::string& zero_mse,
                          const std::string& video_psnr,
                          const std::string& psnr1_w, const std::string& psnr3_w,
                          const std::optional<std::string>& channel_mode,
                          const std::optional<std::string>& quantization,
                          const std::optional<bool>& clamp) {
  opt.run.zero_mse = zero_mse == "floor" ? psnrlab::ZeroMsePolicy::floor
                                         : psnrlab::ZeroMsePolicy::error;
  opt.run.video_psnr = video_psnr == "mean-psnr"
                           ? psnrlab::VideoPsnrOption::mean_frame_psnr
                           : psnrlab::VideoPsnrOption::psnr_of_mean_frame_mse;
  opt.run.psnr1_weighting = psnr1_w == "videos"
                                ? psnrlab::Psnr1Weighting::per_video
                                : psnrlab::Psnr1Weighting::pooled_frames;
  opt.run.psnr3_weighting = psnr3_w == "frames"
                                ? psnrlab::Psnr3Weighting::pooled_frames
                                : psnrlab::Psnr3Weighting::per_video;
  if (channel_mode) {
    opt.run.channel_mode = channel_mode_from_cli(*channel_mode);
  }
  if (quantization) {
    opt.run.quantization = *quantization == "float01"
                               ? psnrlab::Quantization::float01
                               : psnrlab::Quantization::uint8;
  }
  if (clamp) {
    opt.run.clamp = clamp;
  }
}

// Emits the report; returns the process exit code (strict mode turns
// warnings into failure, after the report is written).
int finish(const psnrlab::Report& report, const CliOptions& opt) {
  const auto format = opt.format == "csv" ? psnrlab::ReportFormat::csv
                                          : psnrlab::ReportFormat::json;
  const std::string text = psnrlab::emit(report, format);
  if (opt.output.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      std::cerr << "psnrlab: cannot write " << opt.output << "\n";
      return 1;
    }
    out << text;
  }
  if (!opt.hist_csv.empty()) {
    if (!report.audit) {
      std::cerr << "psnrlab: --hist-csv requested but the report carries no "
                   "distribution audit\n";
      return 1;
    }
    std::ofstream out(opt.hist_csv, std::ios::binary);
    if (!out) {
      std::cerr << "psnrlab: cannot write " << opt.hist_csv << "\n";
      return 1;
    }
    out << psnrlab::histogram_csv(report.audit->histogram);
  }
  if (opt.run.strict && !report.warnings.empty()) {
    std::cerr << "psnrlab: failing on " << report.warnings.size()
              << " warning(s) (--strict)\n";
    for (const std::string& w : report.warnings) {
      std::cerr << "  warning: " << w << "\n";
    }
    return 1;
  }
  return 0;
}

int run_manifest_command(const std::string& manifest_path,
                         psnrlab::RunMode expected, const CliOptions& opt) {
  psnrlab::Manifest manifest = psnrlab::load_manifest(manifest_path);
  if (manifest.mode != expected) {
    throw psnrlab::Error("manifest mode \"" +
                         std::string(psnrlab::to_string(manifest.mode)) +
                         "\" does not match subcommand \"" +
                         std::string(psnrlab::to_string(expected)) + "\"");
  }
  return finish(psnrlab::run(manifest, opt.run), opt);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"PSNR aggregation for image sets, videos, and video sets, "
               "with explicit estimator labeling and an exponential-model "
               "audit of the MSE distribution"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string zero_mse = "error";
  std::string video_psnr = "mean-mse";
  std::string psnr1_w = "frames";
  std::string psnr3_w = "videos";
  std::optional<std::string> channel_mode;
  std::optional<std::string> quantization;
  std::optional<bool> clamp;

  std::string manifest_path;
  std::string list_path;
  psnrlab::SimConfig sim;
  sim.n_samples = 1000000;
  sim.lambda = 1.0;
  sim.seed = 0;
  sim.n_trials = 1;

  auto* image_set = app.add_subcommand(
      "image-set", "PSNR estimates for a set of image pairs");
  image_set->add_option("manifest", manifest_path, "Manifest JSON")->required();

  auto* video = app.add_subcommand(
      "video", "PSNR for one video given as frame pairs or raw YUV");
  video->add_option("manifest", manifest_path, "Manifest JSON")->required();

  auto* video_set = app.add_subcommand(
      "video-set", "PSNR-1/2/3 for a set of videos");
  video_set->add_option("manifest", manifest_path, "Manifest JSON")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "Estimates and distribution audit for a bare MSE list "
                 "(one value per line, optional video id column)");
  analyze->add_option("mse-list", list_path, "Plain-text MSE list")->required();
  analyze->add_option("--peak", opt.run.analyze_peak,
                      "Peak signal value the MSEs are measured against")
      ->capture_default_str();

  auto* simulate = app.add_subcommand(
      "simulate", "Draw exponential MSE samples and report the observed gap "
                  "between the two set estimators per trial");
  simulate->add_option("--n", sim.n_samples, "Samples per trial")
      ->capture_default_str();
  simulate->add_option("--lambda", sim.lambda, "Exponential rate")
      ->capture_default_str();
  simulate->add_option("--trials", sim.n_trials, "Number of trials")
      ->capture_default_str();
  simulate->add_option("--seed", sim.seed, "PRNG seed")->capture_default_str();

  for (CLI::App* cmd : {image_set, video, video_set, analyze}) {
    add_common_flags(cmd, opt);
    add_estimator_flags(cmd, opt, zero_mse, video_psnr, psnr1_w, psnr3_w);
    cmd->add_option("--hist-csv", opt.hist_csv,
                    "Also write the audit histogram as CSV here");
  }
  for (CLI::App* cmd : {image_set, video, video_set}) {
    add_media_flags(cmd, channel_mode, quantization, clamp);
  }
  add_common_flags(simulate, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    apply_string_options(opt, zero_mse, video_psnr, psnr1_w, psnr3_w,
                         channel_mode, quantization, clamp);
    if (image_set->parsed()) {
      return run_manifest_command(manifest_path, psnrlab::RunMode::image_set, opt);
    }
    if (video->parsed()) {
      return run_manifest_command(manifest_path, psnrlab::RunMode::single_video,
                                  opt);
    }
    if (video_set->parsed()) {
      return run_manifest_command(manifest_path, psnrlab::RunMode::video_set, opt);
    }
    if (analyze->parsed()) {
      return finish(psnrlab::analyze_mse_list(list_path, opt.run), opt);
    }
    if (simulate->parsed()) {
      sim.threads = opt.run.threads;
      return finish(psnrlab::simulate_report(sim, opt.run), opt);
    }
  } catch (const std::exception& e) {
    std::cerr << "psnrlab: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
