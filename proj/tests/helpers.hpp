// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <unistd.h>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "psnrlab/pixel_buffer.hpp"
#include "psnrlab/pixel_ops.hpp"
#include "psnrlab/rng.hpp"

namespace testutil {

// Independent MSE oracle: plain double loop in long double, row-major over
// planes in order. Deliberately naive; it must not share code with the
// engine it checks.
inline double naive_mse(const psnrlab::PixelBuffer& a,
                        const psnrlab::PixelBuffer& b) {
  long double sum = 0.0L;
  std::size_t k = 0;
  for (std::size_t p = 0; p < a.planes.size(); ++p) {
    for (std::size_t i = 0; i < a.planes[p].samples.size(); ++i) {
      const long double d = static_cast<long double>(a.planes[p].samples[i]) -
                            static_cast<long double>(b.planes[p].samples[i]);
      sum += d * d;
      ++k;
    }
  }
  return static_cast<double>(sum / static_cast<long double>(k));
}

inline psnrlab::PixelBuffer random_gray_byte(int w, int h,
                                             psnrlab::SplitMix64& rng) {
  psnrlab::PixelBuffer buf = psnrlab::make_gray(w, h, psnrlab::SampleRange::byte);
  for (double& s : buf.planes[0].samples) {
    s = static_cast<double>(rng.next() % 256);
  }
  return buf;
}

inline psnrlab::PixelBuffer random_gray_unit(int w, int h,
                                             psnrlab::SplitMix64& rng) {
  psnrlab::PixelBuffer buf =
      psnrlab::make_gray(w, h, psnrlab::SampleRange::unit_float);
  for (double& s : buf.planes[0].samples) {
    s = rng.next_open01();
  }
  return buf;
}

inline psnrlab::PixelBuffer random_rgb_byte(int w, int h,
                                            psnrlab::SplitMix64& rng) {
  psnrlab::PixelBuffer buf = psnrlab::make_rgb(w, h, psnrlab::SampleRange::byte);
  for (auto& plane : buf.planes) {
    for (double& s : plane.samples) {
      s = static_cast<double>(rng.next() % 256);
    }
  }
  return buf;
}

// Canonical byte-domain pair straight from two byte buffers (geometry
// already matching), bypassing file decode.
inline psnrlab::CanonicalPair byte_pair(psnrlab::PixelBuffer ref,
                                        psnrlab::PixelBuffer dist) {
  psnrlab::CanonicalPair pair;
  pair.ref = std::move(ref);
  pair.dist = std::move(dist);
  pair.peak = 255.0;
  pair.quantization = psnrlab::Quantization::uint8;
  return pair;
}

inline psnrlab::CanonicalPair unit_pair(psnrlab::PixelBuffer ref,
                                        psnrlab::PixelBuffer dist) {
  psnrlab::CanonicalPair pair;
  pair.ref = std::move(ref);
  pair.dist = std::move(dist);
  pair.peak = 1.0;
  pair.quantization = psnrlab::Quantization::float01;
  return pair;
}

// Log-uniform MSE on [1e-8, 1], the spread restoration-style sets show.
inline double random_mse(psnrlab::SplitMix64& rng) {
  return std::pow(10.0, -8.0 * rng.next_open01());
}

inline std::vector<double> random_mse_list(std::size_t n,
                                           psnrlab::SplitMix64& rng) {
  std::vector<double> out(n);
  for (double& m : out) {
    m = random_mse(rng);
  }
  return out;
}

class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    dir_ = std::filesystem::temp_directory_path() /
           ("psnrlab_" + tag + "_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }
  const std::filesystem::path& path() const { return dir_; }

  std::filesystem::path write(const std::string& name,
                              const std::string& content) const {
    const auto p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out << content;
    return p;
  }

  std::filesystem::path write(const std::string& name,
                              const std::vector<std::uint8_t>& bytes) const {
    const auto p = dir_ / name;
    std::ofstream out(p, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    return p;
  }

private:
  std::filesystem::path dir_;
};

} // namespace testutil
