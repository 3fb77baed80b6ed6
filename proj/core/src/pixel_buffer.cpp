// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/pixel_buffer.hpp"

#include <cmath>

#include "psnrlab/error.hpp"

namespace psnrlab {

std::size_t PixelBuffer::sample_count() const {
  std::size_t n = 0;
  for (const Plane& p : planes) {
    n += p.samples.size();
  }
  return n;
}

std::string PixelBuffer::geometry_string() const {
  return std::to_string(width) + "x" + std::to_string(height) + "x" +
         std::to_string(channels());
}

void PixelBuffer::validate() const {
  if (width <= 0 || height <= 0) {
    throw Error("pixel buffer has non-positive geometry " + geometry_string());
  }
  if (planes.empty()) {
    throw Error("pixel buffer has no planes");
  }
  if (channels() != 1 && channels() != 3) {
    throw Error("pixel buffer must have 1 or 3 channels, got " +
                std::to_string(channels()));
  }
  if (channels() == 1 && colorspace == Colorspace::rgb) {
    throw Error("single-channel buffer cannot be rgb");
  }
  if (channels() == 3 && colorspace == Colorspace::gray) {
    throw Error("three-channel buffer cannot be gray");
  }
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const Plane& p = planes[i];
    if (p.samples.size() !=
        static_cast<std::size_t>(p.width) * static_cast<std::size_t>(p.height)) {
      throw Error("plane " + std::to_string(i) + " has " +
                  std::to_string(p.samples.size()) + " samples for geometry " +
                  std::to_string(p.width) + "x" + std::to_string(p.height));
    }
    // Plane 0 is always full resolution; chroma planes may be subsampled.
    if (i == 0 && (p.width != width || p.height != height)) {
      throw Error("plane 0 geometry does not match buffer geometry " +
                  geometry_string());
    }
    const double lo = 0.0;
    const double hi = range == SampleRange::byte ? 255.0 : 1.0;
    for (double s : p.samples) {
      if (!(s >= lo && s <= hi)) {
        throw Error("sample " + std::to_string(s) + " outside declared range [" +
                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
      if (range == SampleRange::byte && s != std::floor(s)) {
        throw Error("byte-range sample " + std::to_string(s) +
                    " is not an integer");
      }
    }
  }
}

PixelBuffer make_gray(int width, int height, SampleRange range) {
  PixelBuffer b;
  b.width = width;
  b.height = height;
  b.range = range;
  b.colorspace = Colorspace::gray;
  b.planes.push_back(Plane{width, height,
                           std::vector<double>(static_cast<std::size_t>(width) *
                                               static_cast<std::size_t>(height))});
  return b;
}

PixelBuffer make_rgb(int width, int height, SampleRange range) {
  PixelBuffer b;
  b.width = width;
  b.height = height;
  b.range = range;
  b.colorspace = Colorspace::rgb;
  for (int c = 0; c < 3; ++c) {
    b.planes.push_back(Plane{width, height,
                             std::vector<double>(static_cast<std::size_t>(width) *
                                                 static_cast<std::size_t>(height))});
  }
  return b;
}

} // namespace psnrlab
