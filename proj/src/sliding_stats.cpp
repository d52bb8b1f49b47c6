#include "slidebin/sliding_stats.hpp"

#include <cmath>

namespace slidebin {

SweepAxis choose_sweep_axis(std::size_t height, std::size_t width,
                            std::optional<SweepAxis> override_axis) noexcept {
  if (override_axis) {
    return *override_axis;
  }
  return width <= height ? SweepAxis::row_major : SweepAxis::column_major;
}

const char* to_string(SweepAxis axis) noexcept {
  return axis == SweepAxis::row_major ? "row" : "column";
}

std::optional<SweepAxis> parse_sweep_axis(const std::string& text) noexcept {
  if (text == "row" || text == "row-major") return SweepAxis::row_major;
  if (text == "column" || text == "column-major") return SweepAxis::column_major;
  return std::nullopt;
}

AccumulatorCapacity accumulator_capacity(std::size_t max_window_side) {
  if (max_window_side <= kCompactMaxWindowSide) {
    return {std::numeric_limits<detail::CompactLayout::ColumnSum>::max(),
            std::numeric_limits<detail::CompactLayout::ColumnSq>::max(),
            std::numeric_limits<detail::CompactLayout::WindowSum>::max(),
            std::numeric_limits<detail::CompactLayout::WindowSq>::max()};
  }
  return {std::numeric_limits<detail::WideLayout::ColumnSum>::max(),
          std::numeric_limits<detail::WideLayout::ColumnSq>::max(),
          std::numeric_limits<detail::WideLayout::WindowSum>::max(),
          std::numeric_limits<detail::WideLayout::WindowSq>::max()};
}

void check_sweep_window(const WindowSpec& spec, const SweepOptions& options) {
  if (options.max_window_side == 0 || options.max_window_side > kWideMaxWindowSide) {
    throw std::invalid_argument("configured maximum window side must lie in [1, 2^24]");
  }
  if (spec.height() > options.max_window_side || spec.width() > options.max_window_side) {
    throw std::invalid_argument("window " + spec.to_string() +
                                " exceeds the configured maximum side " +
                                std::to_string(options.max_window_side));
  }
}

std::size_t quantile_rank(double q, std::size_t n) noexcept {
  const double rank = std::ceil(q * static_cast<double>(n));
  if (rank < 1.0) return 1;
  if (rank > static_cast<double>(n)) return n;
  return static_cast<std::size_t>(rank);
}

}  // namespace slidebin
