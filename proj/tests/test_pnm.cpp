// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "psnrlab/error.hpp"
#include "psnrlab/pnm.hpp"

using namespace psnrlab;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

std::vector<std::uint8_t> cat(std::string header,
                              std::vector<std::uint8_t> payload) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

} // namespace

TEST_CASE("P5 2x2 maxval 255 passes bytes through") {
  const auto data = cat("P5\n2 2\n255\n", {0, 128, 255, 64});
  const PixelBuffer buf = decode_pnm(data);
  CHECK(buf.width == 2);
  CHECK(buf.height == 2);
  CHECK(buf.channels() == 1);
  CHECK(buf.colorspace == Colorspace::gray);
  CHECK(buf.range == SampleRange::byte);
  CHECK(buf.planes[0].samples == std::vector<double>{0, 128, 255, 64});
}

TEST_CASE("P6 constant red image splits into planes") {
  std::vector<std::uint8_t> payload;
  for (int i = 0; i < 4; ++i) {
    payload.push_back(255);
    payload.push_back(0);
    payload.push_back(0);
  }
  const PixelBuffer buf = decode_pnm(cat("P6\n2 2\n255\n", payload));
  CHECK(buf.channels() == 3);
  CHECK(buf.colorspace == Colorspace::rgb);
  CHECK(buf.planes[0].samples == std::vector<double>{255, 255, 255, 255});
  CHECK(buf.planes[1].samples == std::vector<double>{0, 0, 0, 0});
  CHECK(buf.planes[2].samples == std::vector<double>{0, 0, 0, 0});
}

TEST_CASE("truncated P5 payload raises a decode error naming an offset") {
  const auto data = cat("P5\n2 2\n255\n", {1, 2, 3});
  CHECK_THROWS_WITH_AS(decode_pnm(data),
                       doctest::Contains("truncated payload"), DecodeError);
  try {
    decode_pnm(data);
  } catch (const DecodeError& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
}

TEST_CASE("ASCII P2 equals its binary P5 twin") {
  const PixelBuffer ascii = decode_pnm(bytes_of("P2\n# comment\n2 2\n255\n0 128 255 64\n"));
  const PixelBuffer binary = decode_pnm(cat("P5\n2 2\n255\n", {0, 128, 255, 64}));
  CHECK(ascii.planes[0].samples == binary.planes[0].samples);
  CHECK(ascii.range == SampleRange::byte);
}

TEST_CASE("ASCII P3 parses and enforces maxval") {
  const PixelBuffer buf = decode_pnm(bytes_of("P3\n1 1\n255\n12 34 56\n"));
  CHECK(buf.planes[0].samples == std::vector<double>{12});
  CHECK(buf.planes[1].samples == std::vector<double>{34});
  CHECK(buf.planes[2].samples == std::vector<double>{56});
  CHECK_THROWS_AS(decode_pnm(bytes_of("P2\n1 1\n100\n101\n")), DecodeError);
}

TEST_CASE("maxval 65535 normalizes to unit_float with the scale recorded") {
  // One sample, big-endian 0x0100 = 256.
  const PixelBuffer buf = decode_pnm(cat("P5\n1 1\n65535\n", {0x01, 0x00}));
  CHECK(buf.range == SampleRange::unit_float);
  CHECK(buf.source_maxval == 65535);
  CHECK(buf.planes[0].samples[0] == doctest::Approx(256.0 / 65535.0).epsilon(1e-15));
}

TEST_CASE("odd maxval normalizes too") {
  const PixelBuffer buf = decode_pnm(bytes_of("P2\n1 1\n15\n15\n"));
  CHECK(buf.range == SampleRange::unit_float);
  CHECK(buf.source_maxval == 15);
  CHECK(buf.planes[0].samples[0] == 1.0);
}

TEST_CASE("malformed headers fail with offsets") {
  CHECK_THROWS_AS(decode_pnm(bytes_of("P7\n1 1\n255\n")), DecodeError);
  CHECK_THROWS_AS(decode_pnm(bytes_of("P5\n0 2\n255\n")), DecodeError);
  CHECK_THROWS_AS(decode_pnm(bytes_of("P5\n2 2\n0\n")), DecodeError);
  CHECK_THROWS_AS(decode_pnm(bytes_of("P5\n2 2\n70000\n")), DecodeError);
  CHECK_THROWS_AS(decode_pnm(bytes_of("P5\nx 2\n255\n")), DecodeError);
  CHECK_THROWS_AS(decode_pnm(bytes_of("")), DecodeError);
}

TEST_CASE("decode/encode round-trips the pixel payload exactly") {
  SplitMix64 rng(0xC0FFEE);
  for (int iter = 0; iter < 50; ++iter) {
    const int w = 1 + static_cast<int>(rng.next() % 9);
    const int h = 1 + static_cast<int>(rng.next() % 9);
    PixelBuffer buf = (rng.next() & 1) ? testutil::random_rgb_byte(w, h, rng)
                                       : testutil::random_gray_byte(w, h, rng);
    const auto encoded = encode_pnm(buf);
    const PixelBuffer back = decode_pnm(encoded);
    REQUIRE(back.channels() == buf.channels());
    for (int c = 0; c < buf.channels(); ++c) {
      CHECK(back.planes[c].samples == buf.planes[c].samples);
    }
    // Re-encoding the decode is byte-identical.
    CHECK(encode_pnm(back) == encoded);
  }
}

TEST_CASE("16-bit payloads round-trip through normalization") {
  SplitMix64 rng(42);
  std::vector<std::uint8_t> payload;
  std::vector<unsigned> values;
  for (int i = 0; i < 12; ++i) {
    const unsigned v = static_cast<unsigned>(rng.next() % 65536);
    values.push_back(v);
    payload.push_back(static_cast<std::uint8_t>(v >> 8));
    payload.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  const auto file = cat("P5\n4 3\n65535\n", payload);
  const PixelBuffer buf = decode_pnm(file);
  const auto re = encode_pnm(buf);
  CHECK(re == file);
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(buf.planes[0].samples[i] ==
          doctest::Approx(values[i] / 65535.0).epsilon(1e-15));
  }
}
