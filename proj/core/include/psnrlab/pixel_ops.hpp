// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "psnrlab/manifest.hpp"
#include "psnrlab/pixel_buffer.hpp"

namespace psnrlab {

// A ref/dist pair reduced to the channel and quantization domain the run
// computes MSE over. Both buffers share geometry, channel count, and range;
// peak is 1.0 in the unit_float domain and 255.0 in the uint8 domain.
struct CanonicalPair {
  PixelBuffer ref;
  PixelBuffer dist;
  double peak = 255.0;
  ChannelMode channel_mode = ChannelMode::y_bt601_studio;
  Quantization quantization = Quantization::uint8;
  std::vector<std::string> warnings;
};

// Byte-range samples scaled into [0, 1]; unit_float passes through.
PixelBuffer normalize_to_unit(const PixelBuffer& buf);

// RGB -> single luma plane, in unit_float:
//   y_full_range:    Y = 0.299 R + 0.587 G + 0.114 B
//   y_bt601_studio:  Y = (16 + 65.481 R + 128.553 G + 24.966 B) / 255,
//                    clipped to [16/255, 235/255]
// Byte-range input is normalized first. A single-channel input is returned
// unchanged with *noop set (conversion requested but nothing to convert).
PixelBuffer to_luma(const PixelBuffer& buf, ChannelMode mode,
                    bool* noop = nullptr);

// unit_float -> target quantization. uint8 scales by 255, rounds half away
// from zero, clips to [0, 255]; float01 optionally clamps to [0, 1]. Total:
// no error paths.
PixelBuffer quantize(const PixelBuffer& buf, Quantization mode, bool clamp);

// Full reduction of a decoded pair to the canonical domain. Hard error on
// mismatched geometry (names both), on RGB-mode PSNR over YCbCr input
// (chroma is never resampled), and on quantizing a >8-bit source to uint8.
CanonicalPair canonicalize(const PixelBuffer& ref, const PixelBuffer& dist,
                           ChannelMode channel_mode, Quantization quantization,
                           bool clamp);

} // namespace psnrlab
