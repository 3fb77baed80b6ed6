// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/yuv.hpp"

#include <string>

#include "psnrlab/error.hpp"

namespace psnrlab {

namespace {

void check_geometry(int width, int height, ChromaSubsampling ss) {
  if (width <= 0 || height <= 0) {
    throw DecodeError("yuv: non-positive geometry " + std::to_string(width) +
                      "x" + std::to_string(height));
  }
  if (ss == ChromaSubsampling::s420 && (width % 2 != 0 || height % 2 != 0)) {
    throw DecodeError("yuv: 4:2:0 requires even dimensions, got " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
}

} // namespace

std::size_t yuv_frame_bytes(int width, int height, ChromaSubsampling ss) {
  check_geometry(width, height, ss);
  const std::size_t luma =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t chroma = ss == ChromaSubsampling::s420
                                 ? (static_cast<std::size_t>(width) / 2) *
                                       (static_cast<std::size_t>(height) / 2)
                                 : luma;
  return luma + 2 * chroma;
}

std::size_t yuv_frame_count(std::size_t stream_bytes, int width, int height,
                            ChromaSubsampling ss) {
  return stream_bytes / yuv_frame_bytes(width, height, ss);
}

PixelBuffer decode_yuv_frame(std::span<const std::uint8_t> stream, int width,
                             int height, std::size_t frame_index,
                             ChromaSubsampling ss) {
  const std::size_t frame_bytes = yuv_frame_bytes(width, height, ss);
  const std::size_t begin = frame_index * frame_bytes;
  const std::size_t end = begin + frame_bytes;
  if (stream.size() < end) {
    throw DecodeError("yuv: stream of " + std::to_string(stream.size()) +
                      " bytes too short for frame " +
                      std::to_string(frame_index) + " (needs bytes [" +
                      std::to_string(begin) + ", " + std::to_string(end) +
                      "))");
  }

  const int cw = ss == ChromaSubsampling::s420 ? width / 2 : width;
  const int ch = ss == ChromaSubsampling::s420 ? height / 2 : height;

  PixelBuffer buf;
  buf.width = width;
  buf.height = height;
  buf.range = SampleRange::byte;
  buf.colorspace = Colorspace::ycbcr;
  buf.source_maxval = 255;

  std::size_t pos = begin;
  auto read_plane = [&](int pw, int ph) {
    Plane p{pw, ph, {}};
    const std::size_t n =
        static_cast<std::size_t>(pw) * static_cast<std::size_t>(ph);
    p.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.samples.push_back(static_cast<double>(stream[pos + i]));
    }
    pos += n;
    return p;
  };

  buf.planes.push_back(read_plane(width, height)); // Y
  buf.planes.push_back(read_plane(cw, ch));        // Cb
  buf.planes.push_back(read_plane(cw, ch));        // Cr
  return buf;
}

} // namespace psnrlab
