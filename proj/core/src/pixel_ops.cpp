// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/pixel_ops.hpp"

#include <algorithm>
#include <cmath>

#include "psnrlab/error.hpp"

namespace psnrlab {

PixelBuffer normalize_to_unit(const PixelBuffer& buf) {
  if (buf.range == SampleRange::unit_float) {
    return buf;
  }
  PixelBuffer out = buf;
  out.range = SampleRange::unit_float;
  for (Plane& p : out.planes) {
    for (double& s : p.samples) {
      s /= 255.0;
    }
  }
  return out;
}

PixelBuffer to_luma(const PixelBuffer& buf, ChannelMode mode, bool* noop) {
  if (noop) {
    *noop = false;
  }
  if (mode == ChannelMode::rgb) {
    throw Error("to_luma: channel mode rgb requests no conversion");
  }
  if (buf.channels() == 1) {
    if (noop) {
      *noop = true;
    }
    return buf;
  }
  if (buf.colorspace != Colorspace::rgb) {
    throw Error("to_luma: expected an RGB buffer, got " +
                std::string(buf.colorspace == Colorspace::ycbcr ? "ycbcr"
                                                                : "gray"));
  }

  const PixelBuffer unit = normalize_to_unit(buf);
  PixelBuffer out = make_gray(buf.width, buf.height, SampleRange::unit_float);
  out.source_maxval = buf.source_maxval;

  const std::vector<double>& r = unit.planes[0].samples;
  const std::vector<double>& g = unit.planes[1].samples;
  const std::vector<double>& b = unit.planes[2].samples;
  std::vector<double>& y = out.planes[0].samples;

  if (mode == ChannelMode::y_full_range) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = 0.299 * r[i] + 0.587 * g[i] + 0.114 * b[i];
    }
  } else {
    // Studio swing: offset 16, weights summing to 219, result on [16, 235].
    constexpr double kLo = 16.0 / 255.0;
    constexpr double kHi = 235.0 / 255.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double v =
          (16.0 + 65.481 * r[i] + 128.553 * g[i] + 24.966 * b[i]) / 255.0;
      y[i] = std::clamp(v, kLo, kHi);
    }
  }
  return out;
}

PixelBuffer quantize(const PixelBuffer& buf, Quantization mode, bool clamp) {
  if (buf.range != SampleRange::unit_float) {
    throw Error("quantize: input must be in the unit_float domain");
  }
  PixelBuffer out = buf;
  if (mode == Quantization::uint8) {
    out.range = SampleRange::byte;
    out.source_maxval = 255;
    for (Plane& p : out.planes) {
      for (double& s : p.samples) {
        // std::round is round-half-away-from-zero.
        s = std::clamp(std::round(s * 255.0), 0.0, 255.0);
      }
    }
  } else if (clamp) {
    for (Plane& p : out.planes) {
      for (double& s : p.samples) {
        s = std::clamp(s, 0.0, 1.0);
      }
    }
  }
  return out;
}

namespace {

// Channel reduction for one buffer. Y-only modes take the Y plane of a
// YCbCr source as-is (chroma dropped, never upsampled) and convert RGB
// through to_luma; rgb mode refuses YCbCr input outright.
PixelBuffer reduce_channels(const PixelBuffer& buf, ChannelMode mode,
                            std::vector<std::string>& warnings,
                            const char* role) {
  if (mode == ChannelMode::rgb) {
    if (buf.colorspace == Colorspace::ycbcr) {
      throw Error(std::string("canonicalize: rgb channel mode over YCbCr ") +
                  role + " input is not supported (chroma is never resampled "
                         "to full resolution)");
    }
    return buf;
  }
  if (buf.colorspace == Colorspace::ycbcr) {
    PixelBuffer y = buf;
    y.planes.resize(1); // keep the full-resolution Y plane only
    return y;
  }
  bool noop = false;
  PixelBuffer out = to_luma(buf, mode, &noop);
  if (noop) {
    warnings.push_back(std::string("channel mode ") +
                       std::string(to_string(mode)) + " requested but " + role +
                       " input is already single-channel; samples used as-is");
  }
  return out;
}

// Quantization-domain reduction. A byte buffer is already in the uint8
// domain; a unit_float buffer from a >8-bit source must not be silently
// squeezed into uint8.
PixelBuffer reduce_quantization(const PixelBuffer& buf, Quantization q,
                                bool clamp, const char* role) {
  if (q == Quantization::uint8) {
    if (buf.range == SampleRange::byte) {
      return buf;
    }
    if (buf.source_maxval > 255) {
      throw Error(std::string("canonicalize: ") + role + " input comes from a " +
                  std::to_string(buf.source_maxval) +
                  "-maxval source; quantizing to uint8 would lose precision "
                  "(use float01)");
    }
    return quantize(buf, Quantization::uint8, clamp);
  }
  return quantize(normalize_to_unit(buf), Quantization::float01, clamp);
}

} // namespace

CanonicalPair canonicalize(const PixelBuffer& ref, const PixelBuffer& dist,
                           ChannelMode channel_mode, Quantization quantization,
                           bool clamp) {
  if (ref.width != dist.width || ref.height != dist.height) {
    throw Error("canonicalize: dimension mismatch, ref " +
                ref.geometry_string() + " vs dist " + dist.geometry_string());
  }

  CanonicalPair pair;
  pair.channel_mode = channel_mode;
  pair.quantization = quantization;
  pair.peak = quantization == Quantization::uint8 ? 255.0 : 1.0;

  PixelBuffer r = reduce_channels(ref, channel_mode, pair.warnings, "ref");
  PixelBuffer d = reduce_channels(dist, channel_mode, pair.warnings, "dist");
  if (r.channels() != d.channels()) {
    throw Error("canonicalize: channel mismatch after reduction, ref " +
                r.geometry_string() + " vs dist " + d.geometry_string());
  }
  pair.ref = reduce_quantization(r, quantization, clamp, "ref");
  pair.dist = reduce_quantization(d, quantization, clamp, "dist");

  for (int c = 0; c < pair.ref.channels(); ++c) {
    if (pair.ref.planes[c].samples.size() != pair.dist.planes[c].samples.size()) {
      throw Error("canonicalize: plane " + std::to_string(c) +
                  " size mismatch, ref " + pair.ref.geometry_string() +
                  " vs dist " + pair.dist.geometry_string());
    }
  }
  return pair;
}

} // namespace psnrlab
