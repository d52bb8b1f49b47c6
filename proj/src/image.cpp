#include "slidebin/image.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slidebin {

namespace {

void check_shape(std::size_t height, std::size_t width, std::size_t count, const char* what) {
  if (height == 0 || width == 0) {
    throw std::invalid_argument(std::string(what) + ": image sides must be at least 1");
  }
  if (count != height * width) {
    throw std::invalid_argument(std::string(what) + ": pixel count does not match height * width");
  }
}

}  // namespace

GrayImage::GrayImage(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
  check_shape(height_, width_, pixels_.size(), "GrayImage");
}

GrayImage::GrayImage(std::size_t height, std::size_t width, std::uint8_t level)
    : GrayImage(height, width, std::vector<std::uint8_t>(height * width, level)) {}

GrayImage GrayImage::transposed() const {
  std::vector<std::uint8_t> out(pixels_.size());
  for (std::size_t i = 0; i < height_; ++i) {
    for (std::size_t j = 0; j < width_; ++j) {
      out[j * height_ + i] = pixels_[i * width_ + j];
    }
  }
  return GrayImage(width_, height_, std::move(out));
}

BinaryImage::BinaryImage(std::size_t height, std::size_t width)
    : BinaryImage(height, width, std::vector<Label>(height * width, Label::background)) {}

BinaryImage::BinaryImage(std::size_t height, std::size_t width, std::vector<Label> labels)
    : height_(height), width_(width), labels_(std::move(labels)) {
  check_shape(height_, width_, labels_.size(), "BinaryImage");
}

std::size_t BinaryImage::count(Label label) const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

std::size_t count_mismatches(const BinaryImage& a, const BinaryImage& b) noexcept {
  if (a.height() != b.height() || a.width() != b.width()) {
    return std::max(a.labels().size(), b.labels().size());
  }
  std::size_t mismatches = 0;
  auto la = a.labels();
  auto lb = b.labels();
  for (std::size_t k = 0; k < la.size(); ++k) {
    mismatches += la[k] != lb[k] ? 1 : 0;
  }
  return mismatches;
}

}  // namespace slidebin
