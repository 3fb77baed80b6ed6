// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#include "psnrlab/pnm.hpp"

#include <cmath>
#include <string>

#include "psnrlab/error.hpp"

namespace psnrlab {

namespace {

bool is_pnm_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

struct Cursor {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  std::uint8_t peek() const { return data[pos]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw DecodeError("pnm: " + what + " at byte " + std::to_string(pos));
  }

  // Whitespace and '#' comments (which run to end of line) separate header
  // tokens and ASCII samples.
  void skip_space_and_comments() {
    while (!eof()) {
      if (is_pnm_space(peek())) {
        ++pos;
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') {
          ++pos;
        }
      } else {
        return;
      }
    }
  }

  unsigned read_uint(const char* token_name) {
    skip_space_and_comments();
    if (eof()) {
      fail(std::string("unexpected end of data, expected ") + token_name);
    }
    if (peek() < '0' || peek() > '9') {
      fail(std::string("expected decimal ") + token_name);
    }
    unsigned long v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (peek() - '0');
      if (v > 0xFFFFFFFFUL) {
        fail(std::string("oversized ") + token_name);
      }
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
};

} // namespace

PixelBuffer decode_pnm(std::span<const std::uint8_t> bytes) {
  Cursor c{bytes};
  if (bytes.size() < 2 || bytes[0] != 'P') {
    c.fail("unrecognized magic");
  }
  const char kind = static_cast<char>(bytes[1]);
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
    c.pos = 1;
    c.fail("unsupported PNM type P" + std::string(1, kind));
  }
  c.pos = 2;

  const bool ascii = kind == '2' || kind == '3';
  const int channels = (kind == '3' || kind == '6') ? 3 : 1;

  const unsigned width = c.read_uint("width");
  const unsigned height = c.read_uint("height");
  const unsigned maxval = c.read_uint("maxval");
  if (width == 0 || height == 0) {
    c.fail("zero image dimension");
  }
  if (maxval == 0 || maxval > 65535) {
    c.fail("unsupported maxval " + std::to_string(maxval));
  }

  PixelBuffer buf = channels == 3
                        ? make_rgb(static_cast<int>(width), static_cast<int>(height),
                                   SampleRange::byte)
                        : make_gray(static_cast<int>(width), static_cast<int>(height),
                                    SampleRange::byte);
  buf.source_maxval = static_cast<int>(maxval);
  const bool native_byte = maxval == 255;
  buf.range = native_byte ? SampleRange::byte : SampleRange::unit_float;
  const double scale = native_byte ? 1.0 : 1.0 / static_cast<double>(maxval);

  const std::size_t pixels =
      static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t total = pixels * static_cast<std::size_t>(channels);

  auto store = [&](std::size_t flat_index, unsigned value) {
    if (value > maxval) {
      c.fail("sample " + std::to_string(value) + " exceeds maxval " +
             std::to_string(maxval));
    }
    // Interleaved sample order: channel = flat % channels.
    const std::size_t pixel = flat_index / channels;
    const std::size_t chan = flat_index % channels;
    buf.planes[chan].samples[pixel] =
        native_byte ? static_cast<double>(value)
                    : static_cast<double>(value) * scale;
  };

  if (ascii) {
    for (std::size_t i = 0; i < total; ++i) {
      store(i, c.read_uint("sample"));
    }
  } else {
    // Exactly one whitespace byte separates the maxval from binary payload.
    if (c.eof() || !is_pnm_space(c.peek())) {
      c.fail("missing whitespace before binary payload");
    }
    ++c.pos;
    const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
    const std::size_t need = total * bytes_per_sample;
    if (bytes.size() - c.pos < need) {
      c.pos = bytes.size();
      throw DecodeError("pnm: truncated payload at byte " +
                        std::to_string(bytes.size()) + " (header promises " +
                        std::to_string(need) + " payload bytes)");
    }
    if (bytes_per_sample == 1) {
      for (std::size_t i = 0; i < total; ++i) {
        store(i, bytes[c.pos + i]);
      }
    } else {
      for (std::size_t i = 0; i < total; ++i) {
        // Big-endian, most significant byte first.
        const unsigned hi = bytes[c.pos + 2 * i];
        const unsigned lo = bytes[c.pos + 2 * i + 1];
        store(i, (hi << 8) | lo);
      }
    }
    c.pos += need;
  }

  return buf;
}

std::vector<std::uint8_t> encode_pnm(const PixelBuffer& buf) {
  if (buf.colorspace == Colorspace::ycbcr) {
    throw Error("pnm: cannot encode a YCbCr buffer");
  }
  if (buf.channels() != 1 && buf.channels() != 3) {
    throw Error("pnm: buffer must have 1 or 3 channels");
  }
  const bool byte_range = buf.range == SampleRange::byte;
  const unsigned maxval =
      byte_range ? 255u : static_cast<unsigned>(buf.source_maxval);
  if (maxval == 0 || maxval > 65535) {
    throw Error("pnm: buffer source_maxval " + std::to_string(buf.source_maxval) +
                " not encodable");
  }

  std::vector<std::uint8_t> out;
  const std::string header = std::string(buf.channels() == 3 ? "P6" : "P5") +
                             "\n" + std::to_string(buf.width) + " " +
                             std::to_string(buf.height) + "\n" +
                             std::to_string(maxval) + "\n";
  out.insert(out.end(), header.begin(), header.end());

  const std::size_t pixels = static_cast<std::size_t>(buf.width) *
                             static_cast<std::size_t>(buf.height);
  for (std::size_t p = 0; p < pixels; ++p) {
    for (int ch = 0; ch < buf.channels(); ++ch) {
      const double s = buf.planes[ch].samples[p];
      const double raw =
          byte_range ? s : std::round(s * static_cast<double>(maxval));
      if (!(raw >= 0.0 && raw <= static_cast<double>(maxval))) {
        throw Error("pnm: sample " + std::to_string(s) +
                    " not representable with maxval " + std::to_string(maxval));
      }
      const unsigned v = static_cast<unsigned>(raw);
      if (maxval > 255) {
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v & 0xFF));
      } else {
        out.push_back(static_cast<std::uint8_t>(v));
      }
    }
  }
  return out;
}

} // namespace psnrlab
