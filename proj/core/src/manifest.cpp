// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "psnrlab/error.hpp"

namespace psnrlab {

using ordered_json = nlohmann::ordered_json;

std::string_view to_string(RunMode m) {
  switch (m) {
  case RunMode::image_set: return "image_set";
  case RunMode::single_video: return "single_video";
  case RunMode::video_set: return "video_set";
  case RunMode::simulate: return "simulate";
  }
  return "?";
}

std::string_view to_string(ChannelMode m) {
  switch (m) {
  case ChannelMode::rgb: return "rgb";
  case ChannelMode::y_bt601_studio: return "y_bt601_studio";
  case ChannelMode::y_full_range: return "y_full_range";
  }
  return "?";
}

std::string_view to_string(Quantization q) {
  return q == Quantization::float01 ? "float01" : "uint8";
}

std::string_view to_string(ChromaSubsampling ss) {
  return ss == ChromaSubsampling::s420 ? "420" : "444";
}

namespace {

[[noreturn]] void bad_enum(std::string_view field, std::string_view value) {
  throw ManifestError("manifest: unknown " + std::string(field) + " \"" +
                      std::string(value) + "\"");
}

} // namespace

RunMode run_mode_from_string(std::string_view s) {
  if (s == "image_set") return RunMode::image_set;
  if (s == "single_video") return RunMode::single_video;
  if (s == "video_set") return RunMode::video_set;
  if (s == "simulate") return RunMode::simulate;
  bad_enum("mode", s);
}

ChannelMode channel_mode_from_string(std::string_view s) {
  if (s == "rgb") return ChannelMode::rgb;
  if (s == "y_bt601_studio") return ChannelMode::y_bt601_studio;
  if (s == "y_full_range") return ChannelMode::y_full_range;
  bad_enum("channel_mode", s);
}

Quantization quantization_from_string(std::string_view s) {
  if (s == "float01") return Quantization::float01;
  if (s == "uint8") return Quantization::uint8;
  bad_enum("quantization", s);
}

ChromaSubsampling subsampling_from_string(std::string_view s) {
  if (s == "420") return ChromaSubsampling::s420;
  if (s == "444") return ChromaSubsampling::s444;
  bad_enum("subsampling", s);
}

bool ManifestItem::is_raw_yuv() const {
  auto has_yuv_ext = [](const std::string& p) {
    auto ext = std::filesystem::path(p).extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return ext == ".yuv";
  };
  return has_yuv_ext(ref) || has_yuv_ext(dist);
}

std::filesystem::path Manifest::resolve(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_absolute() || base_dir.empty()) {
    return p;
  }
  return base_dir / p;
}

namespace {

void reject_unknown_keys(const ordered_json& obj,
                         std::initializer_list<std::string_view> known,
                         std::string_view where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ManifestError("manifest: unknown key \"" + key + "\" in " +
                          std::string(where));
    }
  }
}

std::string require_string(const ordered_json& obj, const char* key,
                           std::string_view where) {
  if (!obj.contains(key)) {
    throw ManifestError("manifest: missing \"" + std::string(key) + "\" in " +
                        std::string(where));
  }
  if (!obj[key].is_string()) {
    throw ManifestError("manifest: \"" + std::string(key) + "\" in " +
                        std::string(where) + " must be a string");
  }
  return obj[key].get<std::string>();
}

int require_positive_int(const ordered_json& obj, const char* key,
                         std::string_view where) {
  if (!obj.contains(key) || !obj[key].is_number_integer() ||
      obj[key].get<long long>() <= 0) {
    throw ManifestError("manifest: \"" + std::string(key) + "\" in " +
                        std::string(where) + " must be a positive integer");
  }
  return static_cast<int>(obj[key].get<long long>());
}

} // namespace

Manifest parse_manifest(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError(std::string("manifest: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ManifestError("manifest: top level must be a JSON object");
  }
  reject_unknown_keys(doc, {"mode", "channel_mode", "quantization", "clamp", "items"},
                      "manifest");

  Manifest m;
  if (!doc.contains("mode")) {
    throw ManifestError("manifest: missing \"mode\"");
  }
  m.mode = run_mode_from_string(require_string(doc, "mode", "manifest"));
  if (doc.contains("channel_mode")) {
    m.channel_mode =
        channel_mode_from_string(require_string(doc, "channel_mode", "manifest"));
  }
  if (doc.contains("quantization")) {
    m.quantization =
        quantization_from_string(require_string(doc, "quantization", "manifest"));
  }
  if (doc.contains("clamp")) {
    if (!doc["clamp"].is_boolean()) {
      throw ManifestError("manifest: \"clamp\" must be a boolean");
    }
    m.clamp = doc["clamp"].get<bool>();
  }

  if (doc.contains("items")) {
    if (!doc["items"].is_array()) {
      throw ManifestError("manifest: \"items\" must be an array");
    }
    std::size_t index = 0;
    for (const auto& entry : doc["items"]) {
      const std::string where = "items[" + std::to_string(index) + "]";
      if (!entry.is_object()) {
        throw ManifestError("manifest: " + where + " must be an object");
      }
      reject_unknown_keys(
          entry, {"ref", "dist", "video", "width", "height", "subsampling"}, where);
      ManifestItem item;
      item.ref = require_string(entry, "ref", where);
      item.dist = require_string(entry, "dist", where);
      if (entry.contains("video")) {
        item.video = require_string(entry, "video", where);
      }
      const bool any_geom = entry.contains("width") || entry.contains("height") ||
                            entry.contains("subsampling");
      if (any_geom) {
        RawVideoGeometry g;
        g.width = require_positive_int(entry, "width", where);
        g.height = require_positive_int(entry, "height", where);
        g.subsampling = subsampling_from_string(
            require_string(entry, "subsampling", where));
        item.geometry = g;
      }
      if (item.is_raw_yuv() && !item.geometry) {
        throw ManifestError(
            "manifest: " + where +
            " is raw YUV but carries no width/height/subsampling; raw video "
            "geometry is never guessed");
      }
      m.items.push_back(std::move(item));
      ++index;
    }
  }

  if (m.items.empty() && m.mode != RunMode::simulate) {
    throw ManifestError("manifest: \"items\" must be a non-empty array");
  }

  // Within one video every raw frame source must share geometry.
  std::map<std::string, RawVideoGeometry> video_geom;
  for (const auto& item : m.items) {
    if (!item.geometry || !item.video) {
      continue;
    }
    auto [it, inserted] = video_geom.emplace(*item.video, *item.geometry);
    const RawVideoGeometry& g = it->second;
    if (!inserted && (g.width != item.geometry->width ||
                      g.height != item.geometry->height ||
                      g.subsampling != item.geometry->subsampling)) {
      throw ManifestError("manifest: video \"" + *item.video +
                          "\" mixes frame geometries");
    }
  }

  return m;
}

Manifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    throw ManifestError("manifest: cannot open " + file.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  Manifest m = parse_manifest(text.str());
  m.base_dir = file.has_parent_path() ? file.parent_path()
                                      : std::filesystem::path(".");
  return m;
}

std::string manifest_to_json(const Manifest& m) {
  ordered_json doc;
  doc["mode"] = std::string(to_string(m.mode));
  doc["channel_mode"] = std::string(to_string(m.channel_mode));
  doc["quantization"] = std::string(to_string(m.quantization));
  doc["clamp"] = m.clamp;
  doc["items"] = ordered_json::array();
  for (const auto& item : m.items) {
    ordered_json e;
    e["ref"] = item.ref;
    e["dist"] = item.dist;
    if (item.video) {
      e["video"] = *item.video;
    }
    if (item.geometry) {
      e["width"] = item.geometry->width;
      e["height"] = item.geometry->height;
      e["subsampling"] = std::string(to_string(item.geometry->subsampling));
    }
    doc["items"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

} // namespace psnrlab
