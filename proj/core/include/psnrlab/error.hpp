// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace psnrlab {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Parse/IO failure while decoding media. The message names the byte offset.
class DecodeError : public Error {
public:
  using Error::Error;
};

class ManifestError : public Error {
public:
  using Error::Error;
};

// Geometric-mean estimators are undefined when any MSE is exactly zero.
// `indices` are positions into the offending list; callers that know item
// ids attach them to the message.
class ZeroMseError : public Error {
public:
  ZeroMseError(std::string msg, std::vector<std::size_t> offending)
      : Error(std::move(msg)), indices(std::move(offending)) {}

  std::vector<std::size_t> indices;
};

} // namespace psnrlab
