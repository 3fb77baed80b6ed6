// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "psnrlab/pixel_buffer.hpp"

namespace psnrlab {

enum class ChromaSubsampling { s420, s444 };

// Bytes one frame occupies in a headerless planar 8-bit stream:
// 1.5 * w * h for 4:2:0, 3 * w * h for 4:4:4.
std::size_t yuv_frame_bytes(int width, int height, ChromaSubsampling ss);

// Number of whole frames the stream holds.
std::size_t yuv_frame_count(std::size_t stream_bytes, int width, int height,
                            ChromaSubsampling ss);

// One frame out of a headerless planar YUV stream. Frame f occupies bytes
// [f * frame_bytes, (f + 1) * frame_bytes): Y plane first, then Cb, then Cr.
// 4:2:0 requires even dimensions and keeps its chroma planes at quarter
// resolution. Throws DecodeError on odd 4:2:0 geometry or a stream too
// short for the requested frame.
PixelBuffer decode_yuv_frame(std::span<const std::uint8_t> stream, int width,
                             int height, std::size_t frame_index,
                             ChromaSubsampling ss);

inline PixelBuffer decode_yuv420_frame(std::span<const std::uint8_t> stream,
                                       int width, int height,
                                       std::size_t frame_index) {
  return decode_yuv_frame(stream, width, height, frame_index,
                          ChromaSubsampling::s420);
}

} // namespace psnrlab
