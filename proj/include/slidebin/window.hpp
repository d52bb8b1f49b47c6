#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

namespace slidebin {

/// h x w window. The window of pixel (i, j) covers rows (i - o, i + u] and
/// columns (j - l, j + r]. Even sides are asymmetric, e.g. w = 4 gives l = 2,
/// r = 2 and w = 5 gives l = 3, r = 2.
class WindowSpec {
 public:
  /// Throws std::invalid_argument when either side is zero.
  WindowSpec(std::size_t height, std::size_t width);

  static WindowSpec square(std::size_t side) { return WindowSpec(side, side); }

  std::size_t height() const noexcept { return h_; }
  std::size_t width() const noexcept { return w_; }
  std::size_t area() const noexcept { return h_ * w_; }

  std::ptrdiff_t left() const noexcept { return static_cast<std::ptrdiff_t>((w_ + 1) / 2); }
  std::ptrdiff_t right() const noexcept { return static_cast<std::ptrdiff_t>(w_ / 2); }
  std::ptrdiff_t top() const noexcept { return static_cast<std::ptrdiff_t>((h_ + 1) / 2); }
  std::ptrdiff_t bottom() const noexcept { return static_cast<std::ptrdiff_t>(h_ / 2); }

  /// Same window seen from an image whose axes are exchanged.
  WindowSpec transposed() const noexcept { return WindowSpec(w_, h_); }

  std::string to_string() const;

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;

 private:
  std::size_t h_;
  std::size_t w_;
};

/// Parses "HxW" (or a single number for a square window).
WindowSpec parse_window(const std::string& text);

/// In-bounds extent of the 1-D range (index - before, index + after] within
/// [0, length).
inline std::size_t clamped_extent(std::ptrdiff_t index, std::ptrdiff_t before,
                                  std::ptrdiff_t after, std::ptrdiff_t length) noexcept {
  return static_cast<std::size_t>(std::min(index + after, length - 1) -
                                  std::max(index - before, std::ptrdiff_t{-1}));
}

/// Number of in-bounds pixels of the window of (i, j) in an H x W image.
inline std::size_t effective_count(const WindowSpec& spec, std::size_t i, std::size_t j,
                                   std::size_t height, std::size_t width) noexcept {
  const auto rows = clamped_extent(static_cast<std::ptrdiff_t>(i), spec.top(), spec.bottom(),
                                   static_cast<std::ptrdiff_t>(height));
  const auto cols = clamped_extent(static_cast<std::ptrdiff_t>(j), spec.left(), spec.right(),
                                   static_cast<std::ptrdiff_t>(width));
  return rows * cols;
}

}  // namespace slidebin
