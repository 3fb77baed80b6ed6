// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace psnrlab {

// Declared domain of the sample values.
enum class SampleRange {
  unit_float, // real values in [0, 1]
  byte        // integer values in [0, 255], stored as double
};

enum class Colorspace { rgb, ycbcr, gray };

struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> samples; // row-major, length width * height
};

// One decoded image or video frame. Planes follow the colorspace order
// (R,G,B or Y,Cb,Cr); chroma planes may be subsampled relative to the
// buffer geometry. A single-channel buffer is either gray or the Y plane
// of a YCbCr source.
struct PixelBuffer {
  int width = 0; // full-resolution (luma) geometry
  int height = 0;
  SampleRange range = SampleRange::byte;
  Colorspace colorspace = Colorspace::gray;
  // Maxval of the source the samples came from (255 for 8-bit sources).
  // Quantizing to uint8 is refused when this exceeds 255.
  int source_maxval = 255;
  std::vector<Plane> planes;

  int channels() const { return static_cast<int>(planes.size()); }
  std::size_t sample_count() const;
  std::string geometry_string() const; // e.g. "1920x1080x3"

  // Throws Error when a structural invariant does not hold: plane sizes,
  // sample bounds for the declared range, byte integrality, or a
  // channel/colorspace combination that makes no sense.
  void validate() const;
};

PixelBuffer make_gray(int width, int height, SampleRange range);
PixelBuffer make_rgb(int width, int height, SampleRange range);

} // namespace psnrlab
