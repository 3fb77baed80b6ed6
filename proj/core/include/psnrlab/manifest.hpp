// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psnrlab/yuv.hpp"

namespace psnrlab {

enum class RunMode { image_set, single_video, video_set, simulate };
enum class ChannelMode { rgb, y_bt601_studio, y_full_range };
enum class Quantization { float01, uint8 };

std::string_view to_string(RunMode m);
std::string_view to_string(ChannelMode m);
std::string_view to_string(Quantization q);
std::string_view to_string(ChromaSubsampling ss);

RunMode run_mode_from_string(std::string_view s);
ChannelMode channel_mode_from_string(std::string_view s);
Quantization quantization_from_string(std::string_view s);
ChromaSubsampling subsampling_from_string(std::string_view s);

// Geometry a headerless raw video cannot carry itself. Never guessed: the
// manifest must spell out all three fields for every .yuv entry.
struct RawVideoGeometry {
  int width = 0;
  int height = 0;
  ChromaSubsampling subsampling = ChromaSubsampling::s420;
};

struct ManifestItem {
  std::string ref; // paths exactly as written in the document
  std::string dist;
  std::optional<std::string> video;
  std::optional<RawVideoGeometry> geometry;

  // Raw YUV is recognized by the .yuv extension (case-insensitive).
  bool is_raw_yuv() const;
};

struct Manifest {
  RunMode mode = RunMode::image_set;
  ChannelMode channel_mode = ChannelMode::y_bt601_studio;
  Quantization quantization = Quantization::uint8;
  bool clamp = false;
  std::vector<ManifestItem> items; // order preserved exactly as written
  // Directory item paths are relative to; set by load_manifest.
  std::filesystem::path base_dir;

  std::filesystem::path resolve(const std::string& path) const;
};

// Parses and validates a manifest document. Unknown modes, unknown enum
// values, unknown keys, an empty item list (except in simulate mode), and
// raw-YUV entries without explicit geometry are all ManifestErrors.
Manifest parse_manifest(const std::string& text);

// Reads the file, parses it, and pins base_dir to the file's directory.
Manifest load_manifest(const std::filesystem::path& file);

// Serializes back to the manifest schema; parse_manifest round-trips it.
std::string manifest_to_json(const Manifest& m);

} // namespace psnrlab
