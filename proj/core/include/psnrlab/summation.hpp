// SPDX-FileCopyrightText: 2026 Contributors to the psnrlab project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace psnrlab {

// Neumaier-compensated accumulator. The correction term is carried alongside
// the running sum and folded in once, so results are reproducible and close
// to correctly rounded regardless of summand magnitudes.
class CompensatedSum {
public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) {
    acc.add(x);
  }
  return acc.value();
}

inline double compensated_mean(std::span<const double> xs) {
  return compensated_sum(xs) / static_cast<double>(xs.size());
}

} // namespace psnrlab
