// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "helpers.hpp"
#include "psnrlab/error.hpp"
#include "psnrlab/manifest.hpp"

using namespace psnrlab;

TEST_CASE("minimal image_set fills defaults") {
  const Manifest m = parse_manifest(
      R"({"mode": "image_set", "items": [{"ref": "a.pgm", "dist": "b.pgm"}]})");
  CHECK(m.mode == RunMode::image_set);
  CHECK(m.items.size() == 1);
  CHECK(m.channel_mode == ChannelMode::y_bt601_studio);
  CHECK(m.quantization == Quantization::uint8);
  CHECK(m.clamp == false);
  CHECK(!m.items[0].video.has_value());
  CHECK(!m.items[0].geometry.has_value());
}

TEST_CASE("video_set groups items under video ids in order") {
  const Manifest m = parse_manifest(R"({
    "mode": "video_set",
    "items": [
      {"ref": "v1f1r.pgm", "dist": "v1f1d.pgm", "video": "v1"},
      {"ref": "v1f2r.pgm", "dist": "v1f2d.pgm", "video": "v1"},
      {"ref": "v1f3r.pgm", "dist": "v1f3d.pgm", "video": "v1"},
      {"ref": "v2f1r.pgm", "dist": "v2f1d.pgm", "video": "v2"},
      {"ref": "v2f2r.pgm", "dist": "v2f2d.pgm", "video": "v2"},
      {"ref": "v2f3r.pgm", "dist": "v2f3d.pgm", "video": "v2"}
    ]
  })");
  CHECK(m.items.size() == 6);
  CHECK(*m.items[0].video == "v1");
  CHECK(*m.items[5].video == "v2");
}

TEST_CASE("unknown mode is rejected") {
  CHECK_THROWS_WITH_AS(
      parse_manifest(R"({"mode": "imgs", "items": [{"ref": "a", "dist": "b"}]})"),
      doctest::Contains("unknown mode"), ManifestError);
}

TEST_CASE("unknown enum values and keys are rejected") {
  CHECK_THROWS_AS(parse_manifest(R"({"mode": "image_set", "channel_mode": "luma",
    "items": [{"ref": "a", "dist": "b"}]})"),
                  ManifestError);
  CHECK_THROWS_AS(parse_manifest(R"({"mode": "image_set", "quantisation": "uint8",
    "items": [{"ref": "a", "dist": "b"}]})"),
                  ManifestError);
  CHECK_THROWS_AS(parse_manifest(R"({"mode": "image_set",
    "items": [{"ref": "a", "dist": "b", "w": 2}]})"),
                  ManifestError);
}

TEST_CASE("empty items are rejected outside simulate mode") {
  CHECK_THROWS_WITH_AS(parse_manifest(R"({"mode": "image_set", "items": []})"),
                       doctest::Contains("non-empty"), ManifestError);
  CHECK_THROWS_AS(parse_manifest(R"({"mode": "image_set"})"), ManifestError);
  // Simulate manifests carry no media.
  CHECK_NOTHROW(parse_manifest(R"({"mode": "simulate"})"));
}

TEST_CASE("raw YUV requires explicit geometry") {
  CHECK_THROWS_WITH_AS(
      parse_manifest(
          R"({"mode": "single_video", "items": [{"ref": "a.yuv", "dist": "b.yuv"}]})"),
      doctest::Contains("raw YUV"), ManifestError);
  // Partial geometry is as bad as none.
  CHECK_THROWS_AS(
      parse_manifest(R"({"mode": "single_video",
        "items": [{"ref": "a.yuv", "dist": "b.yuv", "width": 2}]})"),
      ManifestError);
  const Manifest ok = parse_manifest(R"({"mode": "single_video",
    "items": [{"ref": "a.yuv", "dist": "b.yuv",
               "width": 2, "height": 2, "subsampling": "420"}]})");
  REQUIRE(ok.items[0].geometry.has_value());
  CHECK(ok.items[0].geometry->width == 2);
  CHECK(ok.items[0].geometry->subsampling == ChromaSubsampling::s420);
}

TEST_CASE("one video cannot mix frame geometries") {
  CHECK_THROWS_WITH_AS(parse_manifest(R"({"mode": "video_set", "items": [
      {"ref": "a.yuv", "dist": "b.yuv", "video": "v",
       "width": 2, "height": 2, "subsampling": "420"},
      {"ref": "c.yuv", "dist": "d.yuv", "video": "v",
       "width": 4, "height": 2, "subsampling": "420"}
    ]})"),
                       doctest::Contains("mixes frame geometries"),
                       ManifestError);
}

TEST_CASE("round-trip preserves order and fields") {
  const std::string doc = R"({
    "mode": "video_set",
    "channel_mode": "rgb",
    "quantization": "float01",
    "clamp": true,
    "items": [
      {"ref": "z.ppm", "dist": "y.ppm", "video": "v2"},
      {"ref": "a.yuv", "dist": "b.yuv", "video": "v1",
       "width": 16, "height": 8, "subsampling": "444"},
      {"ref": "m.ppm", "dist": "n.ppm", "video": "v2"}
    ]
  })";
  const Manifest m1 = parse_manifest(doc);
  const Manifest m2 = parse_manifest(manifest_to_json(m1));
  CHECK(m2.mode == m1.mode);
  CHECK(m2.channel_mode == m1.channel_mode);
  CHECK(m2.quantization == m1.quantization);
  CHECK(m2.clamp == m1.clamp);
  REQUIRE(m2.items.size() == m1.items.size());
  for (std::size_t i = 0; i < m1.items.size(); ++i) {
    CHECK(m2.items[i].ref == m1.items[i].ref);
    CHECK(m2.items[i].dist == m1.items[i].dist);
    CHECK(m2.items[i].video == m1.items[i].video);
    CHECK(m2.items[i].geometry.has_value() == m1.items[i].geometry.has_value());
    if (m1.items[i].geometry) {
      CHECK(m2.items[i].geometry->width == m1.items[i].geometry->width);
      CHECK(m2.items[i].geometry->height == m1.items[i].geometry->height);
      CHECK(m2.items[i].geometry->subsampling == m1.items[i].geometry->subsampling);
    }
  }
  // And serialization is stable.
  CHECK(manifest_to_json(m2) == manifest_to_json(m1));
}

TEST_CASE("load_manifest resolves paths relative to the manifest file") {
  testutil::TempDir tmp("manifest");
  const auto path = tmp.write("m.json",
                              std::string(R"({"mode": "image_set", "items":
    [{"ref": "r.pgm", "dist": "d.pgm"}]})"));
  const Manifest m = load_manifest(path);
  CHECK(m.base_dir == tmp.path());
  CHECK(m.resolve("r.pgm") == tmp.path() / "r.pgm");
  CHECK(m.resolve("/abs/x.pgm") == std::filesystem::path("/abs/x.pgm"));
}

TEST_CASE("not-JSON input fails cleanly") {
  CHECK_THROWS_AS(parse_manifest("mode: image_set"), ManifestError);
  CHECK_THROWS_AS(parse_manifest("[1,2]"), ManifestError);
}
