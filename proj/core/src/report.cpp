// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"

#include "psnrlab/error.hpp"
#include "psnrlab/parallel.hpp"
#include "psnrlab/pnm.hpp"
#include "psnrlab/summation.hpp"

namespace psnrlab {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::uint8_t> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) {
    throw Error("cannot open " + p.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

std::string_view to_string(ZeroMsePolicy p) {
  return p == ZeroMsePolicy::error ? "error" : "floor";
}

std::string_view to_string(VideoPsnrOption o) {
  return o == VideoPsnrOption::mean_frame_psnr ? "mean_frame_psnr"
                                               : "psnr_of_mean_frame_mse";
}

std::string_view to_string(Psnr1Weighting w) {
  return w == Psnr1Weighting::pooled_frames ? "pooled_frames" : "per_video";
}

std::string_view to_string(Psnr3Weighting w) {
  return w == Psnr3Weighting::per_video ? "per_video" : "pooled_frames";
}

// One expanded ref/dist comparison (an image pair or a single video frame).
struct Job {
  std::string id;
  std::optional<std::string> video;
  bool raw = false;
  std::filesystem::path ref_path; // image pairs
  std::filesystem::path dist_path;
  const std::vector<std::uint8_t>* ref_stream = nullptr; // raw video
  const std::vector<std::uint8_t>* dist_stream = nullptr;
  RawVideoGeometry geom;
  std::size_t frame = 0;
};

struct Expansion {
  std::vector<Job> jobs;
  std::vector<std::string> warnings;
  // Owner of raw video streams for the lifetime of the jobs.
  std::vector<std::unique_ptr<std::vector<std::uint8_t>>> streams;
};

Expansion expand_items(const Manifest& manifest) {
  Expansion ex;
  std::map<std::string, const std::vector<std::uint8_t>*> cache;
  auto stream_for = [&](const std::filesystem::path& p) {
    const std::string key = p.string();
    auto it = cache.find(key);
    if (it != cache.end()) {
      return it->second;
    }
    ex.streams.push_back(
        std::make_unique<std::vector<std::uint8_t>>(read_file(p)));
    cache.emplace(key, ex.streams.back().get());
    return static_cast<const std::vector<std::uint8_t>*>(ex.streams.back().get());
  };

  for (std::size_t idx = 0; idx < manifest.items.size(); ++idx) {
    const ManifestItem& item = manifest.items[idx];
    const std::string where = "items[" + std::to_string(idx) + "] (\"" +
                              item.dist + "\")";
    if (item.is_raw_yuv()) {
      const RawVideoGeometry g = *item.geometry; // validated at parse time
      const auto* ref = stream_for(manifest.resolve(item.ref));
      const auto* dist = stream_for(manifest.resolve(item.dist));
      const std::size_t n_ref =
          yuv_frame_count(ref->size(), g.width, g.height, g.subsampling);
      const std::size_t n_dist =
          yuv_frame_count(dist->size(), g.width, g.height, g.subsampling);
      if (n_ref == 0 || n_dist == 0) {
        throw Error(where + ": stream shorter than one " +
                    std::to_string(g.width) + "x" + std::to_string(g.height) +
                    " frame");
      }
      const std::size_t n = std::min(n_ref, n_dist);
      if (n_ref != n_dist) {
        ex.warnings.push_back(where + ": ref has " + std::to_string(n_ref) +
                              " frames, dist has " + std::to_string(n_dist) +
                              "; comparing the first " + std::to_string(n));
      }
      std::optional<std::string> video;
      if (manifest.mode != RunMode::image_set) {
        video = item.video.value_or(
            manifest.mode == RunMode::single_video
                ? std::string("video")
                : std::filesystem::path(item.dist).stem().string());
      }
      for (std::size_t f = 0; f < n; ++f) {
        Job j;
        j.id = item.dist + "#" + std::to_string(f);
        j.video = video;
        j.raw = true;
        j.ref_stream = ref;
        j.dist_stream = dist;
        j.geom = g;
        j.frame = f;
        ex.jobs.push_back(std::move(j));
      }
    } else {
      Job j;
      j.id = item.dist;
      j.ref_path = manifest.resolve(item.ref);
      j.dist_path = manifest.resolve(item.dist);
      if (manifest.mode == RunMode::single_video) {
        j.video = item.video.value_or("video");
      } else if (manifest.mode == RunMode::video_set) {
        if (!item.video) {
          throw Error(where + ": image-sequence entries need an explicit "
                              "\"video\" id in video_set mode");
        }
        j.video = item.video;
      }
      ex.jobs.push_back(std::move(j));
    }
  }

  if (manifest.mode == RunMode::single_video) {
    std::set<std::string> ids;
    for (const Job& j : ex.jobs) {
      ids.insert(j.video.value_or(""));
    }
    if (ids.size() > 1) {
      std::string list;
      for (const auto& id : ids) {
        list += (list.empty() ? "" : ", ") + id;
      }
      throw Error("single_video manifest names several videos: " + list);
    }
  }
  return ex;
}

std::string join_ids(const std::vector<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    out += (out.empty() ? "\"" : ", \"") + id + "\"";
  }
  return out;
}

// Re-raise a ZeroMseError with item ids instead of bare indices.
[[noreturn]] void rethrow_zero_mse(const ZeroMseError& z,
                                   const std::vector<ReportItem>& items) {
  std::vector<std::string> ids;
  for (std::size_t i : z.indices) {
    ids.push_back(i < items.size() ? items[i].id : std::to_string(i));
  }
  throw Error("zero MSE for item(s) " + join_ids(ids) +
              ": the mean-of-PSNR estimators are undefined; rerun with the "
              "zero-MSE floor policy (--zero-mse floor) to substitute a floor");
}

std::vector<double> floored_list(std::span<const double> mses, double peak) {
  std::vector<double> out(mses.begin(), mses.end());
  for (double& m : out) {
    if (m == 0.0) {
      m = zero_mse_floor(peak);
    }
  }
  return out;
}

void assemble_estimates(Report& rep, const std::vector<MseRecord>& records,
                        double peak, const RunOptions& opts, bool video_mode) {
  std::vector<double> mses;
  mses.reserve(records.size());
  for (const MseRecord& r : records) {
    mses.push_back(r.mse);
  }

  for (std::size_t i = 0; i < records.size(); ++i) {
    const MseRecord& r = records[i];
    ReportItem item;
    item.id = r.item_id;
    item.video = r.video_id;
    item.mse = r.mse;
    item.psnr_db = psnr(r.mse, peak);
    item.pixel_count = r.pixel_count;
    item.width = r.width;
    item.height = r.height;
    rep.items.push_back(std::move(item));
  }

  // Per-video aggregation, grouped in first-appearance order.
  std::vector<std::string> video_order;
  std::map<std::string, std::vector<MseRecord>> by_video;
  if (video_mode) {
    for (const MseRecord& r : records) {
      const std::string vid = r.video_id.value_or("");
      if (by_video.find(vid) == by_video.end()) {
        video_order.push_back(vid);
      }
      by_video[vid].push_back(r);
    }
  }

  std::vector<VideoMse> videos;
  for (const std::string& vid : video_order) {
    videos.push_back(video_mse(by_video[vid], peak));
    const VideoMse& v = videos.back();
    ReportVideo rv;
    rv.id = v.video_id;
    rv.frames = v.frame_mses.size();
    rv.video_mse = v.video_mse;
    rv.psnr_mean_mse_db = v.psnr_from_mean_mse;
    rv.psnr_mean_psnr_db = v.mean_of_frame_psnrs;
    rv.psnr_db = opts.video_psnr == VideoPsnrOption::mean_frame_psnr
                     ? v.mean_of_frame_psnrs
                     : v.psnr_from_mean_mse;
    rep.videos.push_back(std::move(rv));
  }

  try {
    rep.set = set_estimate(mses, peak, opts.zero_mse);
  } catch (const ZeroMseError& z) {
    rethrow_zero_mse(z, rep.items);
  }

  if (rep.set->zero_mse_floored) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < mses.size(); ++i) {
      if (mses[i] == 0.0) {
        ids.push_back(rep.items[i].id);
      }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", zero_mse_floor(peak));
    rep.warnings.push_back("zero MSE floored to " + std::string(buf) +
                           " for item(s) " + join_ids(ids));
  }

  if (rep.config.mode == "video_set" ||
      (rep.config.mode == "analyze" && videos.size() > 0)) {
    try {
      rep.video_set = video_set_psnrs(videos, peak, opts.zero_mse,
                                      opts.psnr1_weighting, opts.psnr3_weighting);
    } catch (const ZeroMseError& z) {
      rethrow_zero_mse(z, rep.items);
    }
    if (!rep.video_set->equal_frame_counts) {
      std::string counts;
      for (std::size_t i = 0; i < videos.size(); ++i) {
        counts += (counts.empty() ? "" : ", ") + videos[i].video_id + "=" +
                  std::to_string(videos[i].frame_mses.size());
      }
      rep.warnings.push_back(
          "videos have unequal frame counts (" + counts +
          "): PSNR-1 weights every frame equally while PSNR-2/PSNR-3 weight "
          "every video equally");
    }
  }

  // The audit describes the same list the estimators consumed; when zeros
  // were floored the floored list is audited (the raw one is not positive).
  if (mses.size() >= 2) {
    const std::vector<double> audited = rep.set->zero_mse_floored
                                            ? floored_list(mses, peak)
                                            : std::move(mses);
    rep.audit = audit(audited, opts.hist_bins);
  } else {
    rep.warnings.push_back(
        "distribution audit skipped: needs at least 2 items");
  }

  // Within a video mixed geometry is a hard error above; across videos it
  // only taints the cross-video pooling, hence the mode-specific wording.
  if (auto warn = warn_mixed_resolution(rep.items, rep.config.mode == "video_set")) {
    rep.warnings.push_back(*warn);
  }
}

} // namespace

std::optional<std::string> warn_mixed_resolution(std::span<const ReportItem> items,
                                                 bool video_mode) {
  std::set<std::string> geoms;
  std::vector<std::string> ordered;
  for (const ReportItem& it : items) {
    if (it.width <= 0 || it.height <= 0) {
      continue; // bare MSE lists carry no geometry
    }
    const std::string g =
        std::to_string(it.width) + "x" + std::to_string(it.height);
    if (geoms.insert(g).second) {
      ordered.push_back(g);
    }
  }
  if (ordered.size() <= 1) {
    return std::nullopt;
  }
  std::string list;
  for (const auto& g : ordered) {
    list += (list.empty() ? "" : ", ") + g;
  }
  if (video_mode) {
    return "videos mix spatial resolutions (" + list +
           "): the pooled-frame PSNR-1 and the mean-video-MSE PSNR-3 combine "
           "different geometries";
  }
  return "items mix spatial resolutions (" + list +
         "): averaging PSNR over differently sized images may not be "
         "appropriate";
}

Report run(const Manifest& manifest, const RunOptions& opts) {
  if (manifest.mode == RunMode::simulate) {
    throw Error("manifest mode \"simulate\" carries no media items; use the "
                "simulate subcommand");
  }
  const ChannelMode cm = opts.channel_mode.value_or(manifest.channel_mode);
  const Quantization q = opts.quantization.value_or(manifest.quantization);
  const bool clamp = opts.clamp.value_or(manifest.clamp);
  const double peak = q == Quantization::uint8 ? 255.0 : 1.0;
  const bool video_mode = manifest.mode != RunMode::image_set;

  Report rep;
  rep.config.mode = std::string(to_string(manifest.mode));
  rep.config.channel_mode = cm;
  rep.config.quantization = q;
  rep.config.clamp = clamp;
  rep.config.peak = peak;
  rep.config.zero_mse = opts.zero_mse;
  rep.config.video_psnr = opts.video_psnr;
  rep.config.psnr1_weighting = opts.psnr1_weighting;
  rep.config.psnr3_weighting = opts.psnr3_weighting;
  rep.config.hist_bins = opts.hist_bins;

  Expansion ex = expand_items(manifest);
  rep.warnings = ex.warnings;

  std::vector<MseRecord> records(ex.jobs.size());
  std::vector<std::uint8_t> luma_noop(ex.jobs.size(), 0);
  parallel_for(ex.jobs.size(), opts.threads, [&](std::size_t i) {
    const Job& j = ex.jobs[i];
    try {
      PixelBuffer ref =
          j.raw ? decode_yuv_frame(*j.ref_stream, j.geom.width, j.geom.height,
                                   j.frame, j.geom.subsampling)
                : decode_pnm(read_file(j.ref_path));
      PixelBuffer dist =
          j.raw ? decode_yuv_frame(*j.dist_stream, j.geom.width, j.geom.height,
                                   j.frame, j.geom.subsampling)
                : decode_pnm(read_file(j.dist_path));
      CanonicalPair pair = canonicalize(ref, dist, cm, q, clamp);
      if (!pair.warnings.empty()) {
        luma_noop[i] = 1;
      }
      MseRecord rec = mse(pair);
      rec.item_id = j.id;
      rec.video_id = j.video;
      records[i] = std::move(rec);
    } catch (const std::exception& e) {
      throw Error("item \"" + j.id + "\": " + e.what());
    }
  });

  std::vector<std::string> noop_ids;
  for (std::size_t i = 0; i < ex.jobs.size(); ++i) {
    if (luma_noop[i]) {
      noop_ids.push_back(ex.jobs[i].id);
    }
  }
  if (!noop_ids.empty()) {
    rep.warnings.push_back("luma conversion requested but input is already "
                           "single-channel for item(s) " +
                           join_ids(noop_ids) + "; samples used as-is");
  }

  assemble_estimates(rep, records, peak, opts, video_mode);
  return rep;
}

Report run(const std::filesystem::path& manifest_path, const RunOptions& opts) {
  return run(load_manifest(manifest_path), opts);
}

Report analyze_mse_text(const std::string& text, const RunOptions& opts) {
  Report rep;
  rep.config.mode = "analyze";
  rep.config.peak = opts.analyze_peak;
  rep.config.zero_mse = opts.zero_mse;
  rep.config.video_psnr = opts.video_psnr;
  rep.config.psnr1_weighting = opts.psnr1_weighting;
  rep.config.psnr3_weighting = opts.psnr3_weighting;
  rep.config.hist_bins = opts.hist_bins;

  std::vector<MseRecord> records;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool any_video = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string mse_token;
    if (!(fields >> mse_token)) {
      continue; // blank or comment-only line
    }
    double value = 0.0;
    std::size_t consumed = 0;
    try {
      value = std::stod(mse_token, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != mse_token.size() || std::isnan(value)) {
      throw Error("analyze: line " + std::to_string(line_no) +
                  ": \"" + mse_token + "\" is not a number");
    }
    if (value < 0.0) {
      throw Error("analyze: line " + std::to_string(line_no) +
                  ": MSE must be nonnegative, got " + mse_token);
    }
    MseRecord rec;
    rec.item_id = "line" + std::to_string(line_no);
    rec.mse = value;
    std::string video;
    if (fields >> video) {
      rec.video_id = video;
      any_video = true;
    }
    std::string extra;
    if (fields >> extra) {
      throw Error("analyze: line " + std::to_string(line_no) +
                  ": unexpected trailing field \"" + extra + "\"");
    }
    records.push_back(std::move(rec));
  }
  if (records.empty()) {
    throw Error("analyze: no MSE values in input");
  }
  if (any_video) {
    for (const MseRecord& r : records) {
      if (!r.video_id) {
        throw Error("analyze: item " + r.item_id +
                    " has no video id while other lines do");
      }
    }
  }

  assemble_estimates(rep, records, opts.analyze_peak, opts, any_video);
  return rep;
}

Report analyze_mse_list(const std::filesystem::path& list_path,
                        const RunOptions& opts) {
  std::ifstream in(list_path, std::ios::binary);
  if (!in) {
    throw Error("analyze: cannot open " + list_path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return analyze_mse_text(text.str(), opts);
}

Report simulate_report(const SimConfig& cfg, const RunOptions& opts) {
  Report rep;
  rep.config.mode = "simulate";
  rep.config.zero_mse = opts.zero_mse;
  rep.config.sim = cfg;
  SimConfig effective = cfg;
  if (effective.threads == 0) {
    effective.threads = opts.threads;
  }
  rep.simulate = simulate_gap(effective);
  rep.simulate->config.threads = 0; // thread count never belongs in output
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

ordered_json json_number(double v) {
  if (std::isnan(v)) {
    return nullptr;
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  return v;
}

std::string fmt_db(double v) {
  if (std::isnan(v)) {
    return "";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt_full(double v) {
  if (std::isnan(v)) {
    return "";
  }
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  out += '"';
  return out;
}

ordered_json methods_for(const Report& r) {
  ordered_json m = ordered_json::object();
  if (r.set) {
    m["psnr_bar_db"] =
        "mean-of-PSNR: arithmetic mean of per-item PSNRs, equal to the PSNR "
        "of the geometric-mean MSE";
    m["psnr_of_mean_mse_db"] = "PSNR-of-mean-MSE: PSNR of the arithmetic-mean MSE";
    m["gap_db"] = "psnr_bar_db - psnr_of_mean_mse_db = 10*log10(AM/GM of MSE)";
  }
  if (!r.videos.empty()) {
    m["videos.psnr_db"] =
        r.config.video_psnr == VideoPsnrOption::mean_frame_psnr
            ? "mean-of-PSNR over the video's frames"
            : "PSNR-of-mean-MSE over the video's frames";
  }
  if (r.video_set) {
    m["psnr1_db"] = std::string("PSNR-1: mean PSNR over frames pooled across "
                                "videos (") +
                    std::string(to_string(r.config.psnr1_weighting)) +
                    " weighting)";
    m["psnr2_db"] =
        "PSNR-2: mean of per-video PSNRs, each from that video's mean frame MSE";
    m["psnr3_db"] = std::string("PSNR-3: PSNR of the mean of per-video MSEs (") +
                    std::string(to_string(r.config.psnr3_weighting)) +
                    " weighting)";
  }
  if (r.simulate) {
    m["gap_db"] = "observed 10*log10(AM/GM) of one exponential sample";
    m["predicted_gap_db"] = "model limit 10*log10(e^gamma)";
  }
  return m;
}

ordered_json config_json(const Report& r) {
  ordered_json c;
  c["mode"] = r.config.mode;
  if (r.config.channel_mode) {
    c["channel_mode"] = std::string(to_string(*r.config.channel_mode));
  }
  if (r.config.quantization) {
    c["quantization"] = std::string(to_string(*r.config.quantization));
  }
  if (r.config.clamp) {
    c["clamp"] = *r.config.clamp;
  } else if (r.config.quantization) {
    c["clamp"] = false;
  }
  if (r.config.mode != "simulate") {
    c["peak"] = r.config.peak;
    c["zero_mse"] = std::string(to_string(r.config.zero_mse));
    if (r.config.zero_mse == ZeroMsePolicy::floor) {
      c["zero_mse_floor"] = zero_mse_floor(r.config.peak);
    }
    c["hist_bins"] = r.config.hist_bins;
  }
  if (!r.videos.empty() || r.video_set) {
    c["video_psnr"] = std::string(to_string(r.config.video_psnr));
  }
  if (r.video_set) {
    c["psnr1_weighting"] = std::string(to_string(r.config.psnr1_weighting));
    c["psnr3_weighting"] = std::string(to_string(r.config.psnr3_weighting));
  }
  if (r.config.sim) {
    c["n_samples"] = r.config.sim->n_samples;
    c["lambda"] = r.config.sim->lambda;
    c["seed"] = r.config.sim->seed;
    c["trials"] = r.config.sim->n_trials;
  }
  c["rounding"] = "uint8 quantization rounds half away from zero";
  c["methods"] = methods_for(r);
  return c;
}

std::string emit_json(const Report& r) {
  ordered_json doc;
  doc["config"] = config_json(r);

  if (!r.items.empty()) {
    doc["items"] = ordered_json::array();
    for (const ReportItem& it : r.items) {
      ordered_json j;
      j["id"] = it.id;
      j["video"] = it.video ? ordered_json(*it.video) : ordered_json(nullptr);
      j["mse"] = json_number(it.mse);
      j["psnr_db"] = json_number(it.psnr_db);
      j["pixel_count"] = it.pixel_count;
      doc["items"].push_back(std::move(j));
    }
  }
  if (!r.videos.empty()) {
    doc["videos"] = ordered_json::array();
    for (const ReportVideo& v : r.videos) {
      ordered_json j;
      j["id"] = v.id;
      j["frames"] = v.frames;
      j["video_mse"] = json_number(v.video_mse);
      j["psnr_mean_mse_db"] = json_number(v.psnr_mean_mse_db);
      j["psnr_mean_psnr_db"] = json_number(v.psnr_mean_psnr_db);
      j["psnr_db"] = json_number(v.psnr_db);
      doc["videos"].push_back(std::move(j));
    }
  }
  if (r.set) {
    ordered_json j;
    j["n"] = r.set->n_items;
    j["psnr_bar_db"] = json_number(r.set->psnr_bar_db);
    j["psnr_of_mean_mse_db"] = json_number(r.set->psnr_of_mean_mse_db);
    j["gap_db"] = json_number(r.set->gap_db);
    j["mse_mean"] = json_number(r.set->mse_mean);
    j["mse_std"] = json_number(r.set->mse_std);
    j["mse_cv"] = json_number(r.set->mse_cv);
    doc["set"] = std::move(j);
  }
  if (r.video_set) {
    ordered_json j;
    j["psnr1_db"] = json_number(r.video_set->psnr1_db);
    j["psnr2_db"] = json_number(r.video_set->psnr2_db);
    j["psnr3_db"] = json_number(r.video_set->psnr3_db);
    j["frame_counts"] = r.video_set->frame_counts;
    doc["video_set"] = std::move(j);
  }
  if (r.audit) {
    ordered_json j;
    j["n"] = r.audit->n;
    j["mean"] = json_number(r.audit->mean);
    j["stddev"] = json_number(r.audit->stddev);
    j["variance"] = json_number(r.audit->variance);
    j["cv"] = json_number(r.audit->cv);
    j["lambda_hat"] = json_number(r.audit->lambda_hat);
    j["geometric_mean"] = json_number(r.audit->geometric_mean);
    j["observed_gap_db"] = json_number(r.audit->observed_gap_db);
    j["predicted_gap_db"] = json_number(r.audit->predicted_gap_db);
    j["ks_statistic"] = json_number(r.audit->ks_statistic);
    j["histogram"] = ordered_json::array();
    for (const HistogramBin& b : r.audit->histogram) {
      ordered_json bin;
      bin["bin_lower"] = json_number(b.lower);
      bin["bin_upper"] = json_number(b.upper);
      bin["count"] = b.count;
      j["histogram"].push_back(std::move(bin));
    }
    doc["audit"] = std::move(j);
  }
  if (r.simulate) {
    ordered_json j;
    j["n_samples"] = r.simulate->config.n_samples;
    j["lambda"] = r.simulate->config.lambda;
    j["seed"] = r.simulate->config.seed;
    j["trials"] = r.simulate->config.n_trials;
    j["gaps_db"] = ordered_json::array();
    for (double g : r.simulate->gaps_db) {
      j["gaps_db"].push_back(json_number(g));
    }
    j["gap_mean_db"] = json_number(r.simulate->gap_mean_db);
    j["gap_std_db"] = json_number(r.simulate->gap_std_db);
    j["predicted_gap_db"] = json_number(r.simulate->predicted_gap_db);
    doc["simulate"] = std::move(j);
  }
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

void summary_row(std::string& out, const char* metric, const std::string& value,
                 const char* units, const std::string& method) {
  out += std::string(metric) + "," + value + "," + units + "," +
         csv_escape(method) + "\n";
}

std::string emit_csv(const Report& r) {
  std::string out;
  out += "section,key,value\n";
  const ordered_json c = config_json(r);
  for (const auto& [key, value] : c.items()) {
    if (key == "methods") {
      continue;
    }
    const std::string v = value.is_string() ? value.get<std::string>()
                                            : value.dump();
    out += "config," + csv_escape(key) + "," + csv_escape(v) + "\n";
  }

  if (!r.items.empty()) {
    out += "\nid,video,mse,psnr_db,pixel_count\n";
    for (const ReportItem& it : r.items) {
      out += csv_escape(it.id) + "," + csv_escape(it.video.value_or("")) + "," +
             fmt_full(it.mse) + "," + fmt_db(it.psnr_db) + "," +
             std::to_string(it.pixel_count) + "\n";
    }
  }
  if (!r.videos.empty()) {
    out += "\nvideo,frames,video_mse,psnr_mean_mse_db,psnr_mean_psnr_db,psnr_db\n";
    for (const ReportVideo& v : r.videos) {
      out += csv_escape(v.id) + "," + std::to_string(v.frames) + "," +
             fmt_full(v.video_mse) + "," + fmt_db(v.psnr_mean_mse_db) + "," +
             fmt_db(v.psnr_mean_psnr_db) + "," + fmt_db(v.psnr_db) + "\n";
    }
  }

  out += "\nmetric,value,units,method\n";
  if (r.set) {
    summary_row(out, "n_items", std::to_string(r.set->n_items), "count", "");
    summary_row(out, "psnr_bar_db", fmt_db(r.set->psnr_bar_db), "dB",
                "mean-of-PSNR (PSNR of the geometric-mean MSE)");
    summary_row(out, "psnr_of_mean_mse_db", fmt_db(r.set->psnr_of_mean_mse_db),
                "dB", "PSNR-of-mean-MSE (PSNR of the arithmetic-mean MSE)");
    summary_row(out, "gap_db", fmt_db(r.set->gap_db), "dB",
                "psnr_bar - psnr_of_mean_mse = 10*log10(AM/GM)");
    summary_row(out, "mse_mean", fmt_full(r.set->mse_mean), "squared-sample", "");
    summary_row(out, "mse_std", fmt_full(r.set->mse_std), "squared-sample",
                "sample std, N-1 divisor");
    summary_row(out, "mse_cv", fmt_full(r.set->mse_cv), "ratio", "std/mean");
  }
  if (r.video_set) {
    summary_row(out, "psnr1_db", fmt_db(r.video_set->psnr1_db), "dB",
                "PSNR-1 (mean PSNR over frames pooled across videos)");
    summary_row(out, "psnr2_db", fmt_db(r.video_set->psnr2_db), "dB",
                "PSNR-2 (mean of per-video PSNRs from mean frame MSE)");
    summary_row(out, "psnr3_db", fmt_db(r.video_set->psnr3_db), "dB",
                "PSNR-3 (PSNR of the mean of per-video MSEs)");
  }
  if (r.audit) {
    summary_row(out, "audit_n", std::to_string(r.audit->n), "count", "");
    summary_row(out, "audit_mean", fmt_full(r.audit->mean), "squared-sample", "");
    summary_row(out, "audit_stddev", fmt_full(r.audit->stddev), "squared-sample",
                "");
    summary_row(out, "audit_cv", fmt_full(r.audit->cv), "ratio",
                "~1 suggests an exponential-like MSE distribution");
    summary_row(out, "lambda_hat", fmt_full(r.audit->lambda_hat),
                "1/squared-sample", "exponential MLE, 1/mean");
    summary_row(out, "geometric_mean", fmt_full(r.audit->geometric_mean),
                "squared-sample", "");
    summary_row(out, "observed_gap_db", fmt_db(r.audit->observed_gap_db), "dB",
                "10*log10(AM/GM)");
    summary_row(out, "predicted_gap_db", fmt_db(r.audit->predicted_gap_db), "dB",
                "exponential-model limit 10*log10(e^gamma)");
    summary_row(out, "ks_statistic", fmt_full(r.audit->ks_statistic), "ratio",
                "one-sample KS distance vs Exp(lambda_hat), descriptive");
    out += "\nbin_lower,bin_upper,count\n";
    for (const HistogramBin& b : r.audit->histogram) {
      out += fmt_full(b.lower) + "," + fmt_full(b.upper) + "," +
             std::to_string(b.count) + "\n";
    }
  }
  if (r.simulate) {
    out += "\ntrial,gap_db\n";
    for (std::size_t i = 0; i < r.simulate->gaps_db.size(); ++i) {
      out += std::to_string(i) + "," + fmt_db(r.simulate->gaps_db[i]) + "\n";
    }
    out += "\nmetric,value,units,method\n";
    summary_row(out, "gap_mean_db", fmt_db(r.simulate->gap_mean_db), "dB",
                "mean of per-trial observed gaps");
    summary_row(out, "gap_std_db", fmt_db(r.simulate->gap_std_db), "dB",
                "sample std of per-trial gaps, N-1 divisor");
    summary_row(out, "predicted_gap_db", fmt_db(r.simulate->predicted_gap_db),
                "dB", "exponential-model limit 10*log10(e^gamma)");
  }

  out += "\nwarnings\n";
  for (const std::string& w : r.warnings) {
    out += csv_escape(w) + "\n";
  }
  return out;
}

} // namespace

std::string emit(const Report& report, ReportFormat format) {
  return format == ReportFormat::json ? emit_json(report) : emit_csv(report);
}

} // namespace psnrlab
