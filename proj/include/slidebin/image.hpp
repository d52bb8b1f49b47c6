#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace slidebin {

/// Row-major 8-bit grayscale raster. Immutable once constructed.
class GrayImage {
 public:
  /// Throws std::invalid_argument when a side is zero or the pixel count does
  /// not match height * width.
  GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels);

  /// Constant image.
  GrayImage(std::size_t height, std::size_t width, std::uint8_t level = 0);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return pixels_[row * width_ + col];
  }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }
  const std::uint8_t* data() const noexcept { return pixels_.data(); }

  GrayImage transposed() const;

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t height_;
  std::size_t width_;
  std::vector<std::uint8_t> pixels_;
};

// Foreground (ink) is 0, the value a pixel gets when it is at or below its
// threshold. PBM output writes it as a black (1) bit.
enum class Label : std::uint8_t { foreground = 0, background = 1 };

class BinaryImage {
 public:
  /// All-background image. Throws std::invalid_argument on a zero side.
  BinaryImage(std::size_t height, std::size_t width);
  BinaryImage(std::size_t height, std::size_t width, std::vector<Label> labels);

  std::size_t height() const noexcept { return height_; }
  std::size_t width() const noexcept { return width_; }

  Label at(std::size_t row, std::size_t col) const noexcept { return labels_[row * width_ + col]; }
  void set(std::size_t row, std::size_t col, Label label) noexcept {
    labels_[row * width_ + col] = label;
  }
  std::span<const Label> labels() const noexcept { return labels_; }
  Label* data() noexcept { return labels_.data(); }

  std::size_t count(Label label) const noexcept;

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  std::size_t height_;
  std::size_t width_;
  std::vector<Label> labels_;
};

/// Number of pixels whose labels differ. Images of different shape are
/// treated as fully mismatching.
std::size_t count_mismatches(const BinaryImage& a, const BinaryImage& b) noexcept;

}  // namespace slidebin
