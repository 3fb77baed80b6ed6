// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <vector>

#include "psnrlab/error.hpp"
#include "psnrlab/rng.hpp"
#include "psnrlab/yuv.hpp"

using namespace psnrlab;

TEST_CASE("frame sizes") {
  CHECK(yuv_frame_bytes(2, 2, ChromaSubsampling::s420) == 6);
  CHECK(yuv_frame_bytes(2, 2, ChromaSubsampling::s444) == 12);
  CHECK(yuv_frame_bytes(1920, 1080, ChromaSubsampling::s420) == 3110400);
  CHECK(yuv_frame_count(12, 2, 2, ChromaSubsampling::s420) == 2);
  CHECK(yuv_frame_count(11, 2, 2, ChromaSubsampling::s420) == 1);
}

TEST_CASE("2x2 4:2:0 frame layout") {
  const std::vector<std::uint8_t> stream = {10, 20, 30, 40, 100, 200};
  const PixelBuffer buf = decode_yuv420_frame(stream, 2, 2, 0);
  CHECK(buf.colorspace == Colorspace::ycbcr);
  CHECK(buf.range == SampleRange::byte);
  CHECK(buf.planes[0].samples == std::vector<double>{10, 20, 30, 40});
  CHECK(buf.planes[1].width == 1);
  CHECK(buf.planes[1].height == 1);
  CHECK(buf.planes[1].samples == std::vector<double>{100});
  CHECK(buf.planes[2].samples == std::vector<double>{200});
}

TEST_CASE("frame 1 of a 6-byte 2x2 stream is out of range") {
  const std::vector<std::uint8_t> stream = {10, 20, 30, 40, 100, 200};
  CHECK_THROWS_WITH_AS(decode_yuv420_frame(stream, 2, 2, 1),
                       doctest::Contains("too short"), DecodeError);
}

TEST_CASE("4x2 frame 1 in a 24-byte stream reads Y from bytes 12..20") {
  std::vector<std::uint8_t> stream(24);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    stream[i] = static_cast<std::uint8_t>(i);
  }
  const PixelBuffer buf = decode_yuv420_frame(stream, 4, 2, 1);
  const std::vector<double> expect = {12, 13, 14, 15, 16, 17, 18, 19};
  CHECK(buf.planes[0].samples == expect);
  CHECK(buf.planes[1].samples == std::vector<double>{20, 21});
  CHECK(buf.planes[2].samples == std::vector<double>{22, 23});
}

TEST_CASE("odd 4:2:0 dimensions are rejected") {
  const std::vector<std::uint8_t> stream(100);
  CHECK_THROWS_AS(decode_yuv420_frame(stream, 3, 2, 0), DecodeError);
  CHECK_THROWS_AS(decode_yuv420_frame(stream, 2, 3, 0), DecodeError);
  CHECK_THROWS_AS(yuv_frame_bytes(0, 2, ChromaSubsampling::s420), DecodeError);
}

TEST_CASE("4:4:4 keeps full-resolution chroma") {
  std::vector<std::uint8_t> stream(12);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    stream[i] = static_cast<std::uint8_t>(i * 3);
  }
  const PixelBuffer buf = decode_yuv_frame(stream, 2, 2, 0, ChromaSubsampling::s444);
  CHECK(buf.planes[0].samples == std::vector<double>{0, 3, 6, 9});
  CHECK(buf.planes[1].width == 2);
  CHECK(buf.planes[1].samples == std::vector<double>{12, 15, 18, 21});
  CHECK(buf.planes[2].samples == std::vector<double>{24, 27, 30, 33});
}

// Frame offset law: frame f reads exactly bytes [f*1.5wh, (f+1)*1.5wh),
// checked against direct byte indexing.
TEST_CASE("frame offset law over random streams") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const int w = 2 * (1 + static_cast<int>(rng.next() % 8));
    const int h = 2 * (1 + static_cast<int>(rng.next() % 8));
    const std::size_t frame_bytes = yuv_frame_bytes(w, h, ChromaSubsampling::s420);
    const std::size_t n_frames = 1 + rng.next() % 5;
    std::vector<std::uint8_t> stream(frame_bytes * n_frames + rng.next() % 4);
    for (auto& b : stream) {
      b = static_cast<std::uint8_t>(rng.next());
    }
    const std::size_t f = rng.next() % n_frames;
    const PixelBuffer buf = decode_yuv420_frame(stream, w, h, f);

    const std::size_t base = f * frame_bytes;
    const std::size_t luma = static_cast<std::size_t>(w) * h;
    const std::size_t chroma = luma / 4;
    for (std::size_t i = 0; i < luma; ++i) {
      REQUIRE(buf.planes[0].samples[i] == static_cast<double>(stream[base + i]));
    }
    for (std::size_t i = 0; i < chroma; ++i) {
      REQUIRE(buf.planes[1].samples[i] ==
              static_cast<double>(stream[base + luma + i]));
      REQUIRE(buf.planes[2].samples[i] ==
              static_cast<double>(stream[base + luma + chroma + i]));
    }
    CHECK(yuv_frame_count(stream.size(), w, h, ChromaSubsampling::s420) == n_frames);
  }
}
