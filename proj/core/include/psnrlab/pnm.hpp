// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psnrlab/pixel_buffer.hpp"

namespace psnrlab {

// Decodes PGM (P2/P5) and PPM (P3/P6) with maxval up to 65535. 8-bit
// payloads (maxval 255) keep their byte values; any other maxval is
// normalized to unit_float by dividing by maxval, with the original maxval
// recorded in source_maxval. Throws DecodeError naming the byte offset on
// malformed input.
PixelBuffer decode_pnm(std::span<const std::uint8_t> bytes);

// Inverse of decode_pnm: raw P5/P6 with maxval = source_maxval. The pixel
// payload round-trips exactly (byte values directly, normalized values via
// round(s * maxval)).
std::vector<std::uint8_t> encode_pnm(const PixelBuffer& buf);

} // namespace psnrlab
