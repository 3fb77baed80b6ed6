// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "psnrlab/error.hpp"
#include "psnrlab/mse.hpp"

using namespace psnrlab;

TEST_CASE("constant 0.1 offset gives mse 0.01 at any size") {
  for (int w : {1, 3, 8}) {
    for (int h : {1, 5}) {
      PixelBuffer ref = make_gray(w, h, SampleRange::unit_float);
      PixelBuffer dist = ref;
      for (double& s : dist.planes[0].samples) {
        s = 0.1;
      }
      const MseRecord rec = mse(testutil::unit_pair(ref, dist));
      CHECK(rec.mse == doctest::Approx(0.01).epsilon(1e-12));
      CHECK(rec.pixel_count == static_cast<std::size_t>(w) * h);
    }
  }
}

TEST_CASE("identical buffers give exactly zero") {
  SplitMix64 rng(5);
  const PixelBuffer buf = testutil::random_gray_byte(7, 7, rng);
  const MseRecord rec = mse(testutil::byte_pair(buf, buf));
  CHECK(rec.mse == 0.0);
}

TEST_CASE("byte-domain +-10 example is exact") {
  PixelBuffer ref = make_gray(2, 2, SampleRange::byte);
  ref.planes[0].samples = {0, 128, 255, 64};
  PixelBuffer dist = make_gray(2, 2, SampleRange::byte);
  dist.planes[0].samples = {10, 118, 245, 74};
  const MseRecord rec = mse(testutil::byte_pair(ref, dist));
  CHECK(rec.mse == 100.0);
}

TEST_CASE("K counts samples across channels") {
  SplitMix64 rng(6);
  const PixelBuffer ref = testutil::random_rgb_byte(4, 2, rng);
  const PixelBuffer dist = testutil::random_rgb_byte(4, 2, rng);
  const MseRecord rec = mse(testutil::byte_pair(ref, dist));
  CHECK(rec.pixel_count == 3u * 4u * 2u);
  CHECK(rec.mse == doctest::Approx(testutil::naive_mse(ref, dist)).epsilon(1e-15));
}

TEST_CASE("oracle equivalence on random small buffers") {
  SplitMix64 rng(0xABCD);
  for (int iter = 0; iter < 200; ++iter) {
    const int w = 1 + static_cast<int>(rng.next() % 8);
    const int h = 1 + static_cast<int>(rng.next() % 8);
    if (rng.next() & 1) {
      const PixelBuffer a = testutil::random_gray_byte(w, h, rng);
      const PixelBuffer b = testutil::random_gray_byte(w, h, rng);
      // Byte differences are integers: both routes are exact.
      CHECK(mse(testutil::byte_pair(a, b)).mse == testutil::naive_mse(a, b));
    } else {
      const PixelBuffer a = testutil::random_gray_unit(w, h, rng);
      const PixelBuffer b = testutil::random_gray_unit(w, h, rng);
      const double got = mse(testutil::unit_pair(a, b)).mse;
      const double want = testutil::naive_mse(a, b);
      CHECK(got == doctest::Approx(want).epsilon(1e-15));
    }
  }
}

TEST_CASE("mse is symmetric") {
  SplitMix64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    const PixelBuffer a = testutil::random_gray_unit(6, 6, rng);
    const PixelBuffer b = testutil::random_gray_unit(6, 6, rng);
    CHECK(mse(testutil::unit_pair(a, b)).mse ==
          mse(testutil::unit_pair(b, a)).mse);
  }
}

TEST_CASE("worker count never changes the value") {
  SplitMix64 rng(33);
  // Large enough to span many 4096-sample chunks.
  const PixelBuffer a = testutil::random_gray_unit(300, 200, rng);
  const PixelBuffer b = testutil::random_gray_unit(300, 200, rng);
  const CanonicalPair pair = testutil::unit_pair(a, b);
  const double w1 = mse(pair, 1).mse;
  const double w2 = mse(pair, 2).mse;
  const double w8 = mse(pair, 8).mse;
  CHECK(w1 == w2);
  CHECK(w1 == w8);
}

TEST_CASE("video_mse averages frames and fills both PSNR variants") {
  auto frame = [](double m) {
    MseRecord r;
    r.video_id = "v";
    r.mse = m;
    r.pixel_count = 100;
    return r;
  };
  const VideoMse v = video_mse({frame(0.01), frame(0.03)}, 1.0);
  CHECK(v.video_mse == doctest::Approx(0.02).epsilon(1e-15));
  CHECK(v.frame_mses == std::vector<double>{0.01, 0.03});
  // Option ii: PSNR of the mean; option i: mean of PSNRs (Jensen above it).
  CHECK(v.psnr_from_mean_mse ==
        doctest::Approx(-10.0 * std::log10(0.02)).epsilon(1e-12));
  CHECK(v.mean_of_frame_psnrs >= v.psnr_from_mean_mse);

  const VideoMse single = video_mse({frame(0.01)}, 1.0);
  CHECK(single.video_mse == 0.01);
  CHECK(single.mean_of_frame_psnrs == single.psnr_from_mean_mse);
}

TEST_CASE("video_mse rejects empty and mixed-geometry input") {
  CHECK_THROWS_AS(video_mse({}, 1.0), Error);
  MseRecord a;
  a.video_id = "v";
  a.pixel_count = 100;
  MseRecord b = a;
  b.pixel_count = 99;
  CHECK_THROWS_WITH_AS(video_mse({a, b}, 1.0),
                       doctest::Contains("mixes frame geometries"), Error);
  MseRecord c = a;
  c.video_id = "w";
  CHECK_THROWS_AS(video_mse({a, c}, 1.0), Error);
}

TEST_CASE("a perfect frame lifts mean-of-frame-PSNRs to infinity") {
  auto frame = [](double m) {
    MseRecord r;
    r.video_id = "v";
    r.mse = m;
    r.pixel_count = 4;
    return r;
  };
  const VideoMse v = video_mse({frame(0.0), frame(0.01)}, 1.0);
  CHECK(std::isinf(v.mean_of_frame_psnrs));
  CHECK(std::isfinite(v.psnr_from_mean_mse));
}
