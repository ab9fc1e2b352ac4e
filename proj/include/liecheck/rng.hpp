#pragma once

#include <cstdint>

#include "liecheck/matrix.hpp"

namespace liecheck {

/// Deterministic pseudo-random source for seeded property checks.
/// splitmix64: identical output on every platform, unlike the standard
/// library distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational small_rational(long max_abs_num, long max_den) {
    return Rational(range(-max_abs_num, max_abs_num), range(1, max_den));
  }

  QMat matrix(std::size_t rows, std::size_t cols, long max_abs_num, long max_den = 1) {
    QMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rational(max_abs_num, max_den);
    return m;
  }

  /// Random integer matrix with determinant ±1, as a short product of
  /// elementary row operations. Keeps entries small.
  QMat unimodular(std::size_t n, std::size_t ops = 0) {
    if (ops == 0) ops = 2 * n;
    QMat m = QMat::identity(n);
    for (std::size_t k = 0; k < ops; ++k) {
      std::size_t i = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(range(0, static_cast<long>(n) - 1));
      if (i == j) {
        if (next() % 2 == 0)
          for (std::size_t c = 0; c < n; ++c) m(i, c) = -m(i, c);
        continue;
      }
      Rational f(range(-2, 2));
      for (std::size_t c = 0; c < n; ++c) m(i, c) += f * m(j, c);
    }
    return m;
  }

 private:
  std::uint64_t state_;
};

}  // namespace liecheck
