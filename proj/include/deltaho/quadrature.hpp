#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "deltaho/error.hpp"

namespace deltaho::quadrature {

/// Composite Simpson rule over uniformly spaced samples. Needs an odd
/// number of samples (an even number of intervals).
template <typename T>
T simpson(std::span<const T> samples, T step) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) {
    throw grid_error("simpson: need an odd sample count >= 3, got " + std::to_string(n));
  }
  T odd{0};
  T even{0};
  for (std::size_t i = 1; i + 1 < n; i += 2) odd += samples[i];
  for (std::size_t i = 2; i + 1 < n; i += 2) even += samples[i];
  return step / T(3) * (samples.front() + samples.back() + T(4) * odd + T(2) * even);
}

/// Simpson rule applied to the pointwise product of two sample sets.
template <typename T>
T simpson_product(std::span<const T> a, std::span<const T> b, T step) {
  const std::size_t n = a.size();
  if (b.size() != n) throw grid_error("simpson_product: sample counts differ");
  if (n < 3 || n % 2 == 0) {
    throw grid_error("simpson_product: need an odd sample count >= 3, got " +
                     std::to_string(n));
  }
  T odd{0};
  T even{0};
  for (std::size_t i = 1; i + 1 < n; i += 2) odd += a[i] * b[i];
  for (std::size_t i = 2; i + 1 < n; i += 2) even += a[i] * b[i];
  return step / T(3) *
         (a.front() * b.front() + a.back() * b.back() + T(4) * odd + T(2) * even);
}

}  // namespace deltaho::quadrature
