#pragma once

// Baseline engines: the definitional O(HWhw) engine and the integral-image
// engine. Both serve as correctness oracles and benchmark comparators for the
// sliding engine.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "slidebin/aux_audit.hpp"
#include "slidebin/image.hpp"
#include "slidebin/rules.hpp"
#include "slidebin/window.hpp"

namespace slidebin {

/// Thrown when an engine cannot evaluate a rule (integral engine with an
/// extrema or quantile rule).
class UnsupportedRule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IntegralKind { identity, square };

/// J[i, j] = sum of f(I[a, b]) over a <= i, b <= j. Elements are 64-bit since
/// a full-page scan overflows 32 bits.
class IntegralImage {
 public:
  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }

  /// J[i, j]; an index of -1 addresses the implicit zero row/column.
  std::uint64_t at(std::ptrdiff_t i, std::ptrdiff_t j) const noexcept {
    if (i < 0 || j < 0) return 0;
    return values_[static_cast<std::size_t>(i) * width_ + static_cast<std::size_t>(j)];
  }

  /// Sum of f over rows (row0, row1] and columns (col0, col1]. Requires
  /// -1 <= row0 <= row1 < H and -1 <= col0 <= col1 < W, else throws
  /// std::out_of_range.
  std::uint64_t window_sum(std::ptrdiff_t row0, std::ptrdiff_t row1, std::ptrdiff_t col0,
                           std::ptrdiff_t col1) const;

  /// window_sum without the range check.
  std::uint64_t window_sum_unchecked(std::ptrdiff_t row0, std::ptrdiff_t row1,
                                     std::ptrdiff_t col0, std::ptrdiff_t col1) const noexcept {
    return at(row1, col1) - at(row0, col1) - at(row1, col0) + at(row0, col0);
  }

  friend IntegralImage build_integral(const GrayImage& image, IntegralKind kind);

 private:
  IntegralImage(std::size_t height, std::size_t width)
      : height_(height), width_(width), values_(height * width, 0) {}

  std::size_t height_;
  std::size_t width_;
  AuxVector<std::uint64_t> values_;
};

IntegralImage build_integral(const GrayImage& image, IntegralKind kind);

/// Ground truth: every window statistic is recomputed from its pixels.
/// Supports every rule.
BinaryImage binarize_naive(const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                           const RuleParams& params);

/// Mean/variance rules only (and otsu); throws UnsupportedRule otherwise.
BinaryImage binarize_integral(const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                              const RuleParams& params);

}  // namespace slidebin
