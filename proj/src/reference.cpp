#include "slidebin/reference.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "slidebin/moments.hpp"
#include "slidebin/sliding_stats.hpp"

namespace slidebin {

IntegralImage build_integral(const GrayImage& image, IntegralKind kind) {
  const auto height = static_cast<std::ptrdiff_t>(image.height());
  const auto width = static_cast<std::ptrdiff_t>(image.width());
  IntegralImage integral(image.height(), image.width());
  std::uint64_t* values = integral.values_.data();
  for (std::ptrdiff_t i = 0; i < height; ++i) {
    for (std::ptrdiff_t j = 0; j < width; ++j) {
      const std::uint64_t level = image.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      const std::uint64_t f = kind == IntegralKind::square ? level * level : level;
      // J[i,j] = J[i-1,j] + J[i,j-1] + f(I[i,j]) - J[i-1,j-1]
      values[i * width + j] =
          integral.at(i - 1, j) + integral.at(i, j - 1) + f - integral.at(i - 1, j - 1);
    }
  }
  return integral;
}

std::uint64_t IntegralImage::window_sum(std::ptrdiff_t row0, std::ptrdiff_t row1,
                                        std::ptrdiff_t col0, std::ptrdiff_t col1) const {
  const auto height = static_cast<std::ptrdiff_t>(height_);
  const auto width = static_cast<std::ptrdiff_t>(width_);
  if (row0 < -1 || row0 > row1 || row1 >= height || col0 < -1 || col0 > col1 || col1 >= width) {
    throw std::out_of_range("window_sum: bounds (" + std::to_string(row0) + ", " +
                            std::to_string(row1) + "] x (" + std::to_string(col0) + ", " +
                            std::to_string(col1) + "] outside the integral image");
  }
  return window_sum_unchecked(row0, row1, col0, col1);
}

namespace {

struct Bounds {
  std::ptrdiff_t row0, row1, col0, col1;  // half-open-below ranges (row0, row1]
};

Bounds clamp_window(const WindowSpec& spec, std::ptrdiff_t i, std::ptrdiff_t j,
                    std::ptrdiff_t height, std::ptrdiff_t width) noexcept {
  return {std::max(i - spec.top(), std::ptrdiff_t{-1}), std::min(i + spec.bottom(), height - 1),
          std::max(j - spec.left(), std::ptrdiff_t{-1}), std::min(j + spec.right(), width - 1)};
}

template <class StatsAt>
BinaryImage threshold_each(const GrayImage& image, RuleKind rule, const RuleParams& params,
                           const GlobalStats& global, StatsAt&& stats_at) {
  const auto height = static_cast<std::ptrdiff_t>(image.height());
  const auto width = static_cast<std::ptrdiff_t>(image.width());
  RuleParams resolved = params;
  if (needs_range_pass(rule, params)) {
    double max_variance = 0.0;
    for (std::ptrdiff_t i = 0; i < height; ++i) {
      for (std::ptrdiff_t j = 0; j < width; ++j) {
        max_variance = std::max(max_variance, stats_at(i, j).variance);
      }
    }
    resolved = resolve_range(rule, params, max_variance);
  }
  BinaryImage out(image.height(), image.width());
  Label* labels = out.data();
  for (std::ptrdiff_t i = 0; i < height; ++i) {
    for (std::ptrdiff_t j = 0; j < width; ++j) {
      const std::uint8_t level = image.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      labels[i * width + j] = is_foreground(rule, level, stats_at(i, j), global, resolved)
                                  ? Label::foreground
                                  : Label::background;
    }
  }
  return out;
}

}  // namespace

BinaryImage binarize_naive(const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                           const RuleParams& params) {
  validate_params(rule, params);
  if (rule == RuleKind::otsu) {
    return apply_global_threshold(image, otsu_threshold(image));
  }
  const StatNeeds needs = rule_needs(rule);
  const GlobalStats global = needs.global ? compute_global_stats(image) : GlobalStats{};
  const auto height = static_cast<std::ptrdiff_t>(image.height());
  const auto width = static_cast<std::ptrdiff_t>(image.width());

  std::array<std::uint32_t, 256> histogram{};
  auto stats_at = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
    const Bounds b = clamp_window(spec, i, j, height, width);
    LocalStats stats;
    stats.window_area = spec.area();
    stats.n = static_cast<std::size_t>((b.row1 - b.row0) * (b.col1 - b.col0));
    std::uint64_t sum = 0;
    std::uint64_t sq_sum = 0;
    std::uint8_t lowest = 255;
    std::uint8_t highest = 0;
    if (needs.median) histogram.fill(0);
    for (std::ptrdiff_t a = b.row0 + 1; a <= b.row1; ++a) {
      const std::uint8_t* row = image.data() + a * width;
      if (needs.moments) {
        for (std::ptrdiff_t c = b.col0 + 1; c <= b.col1; ++c) {
          sum += row[c];
          sq_sum += static_cast<std::uint64_t>(row[c]) * row[c];
        }
      }
      if (needs.extrema) {
        for (std::ptrdiff_t c = b.col0 + 1; c <= b.col1; ++c) {
          lowest = std::min(lowest, row[c]);
          highest = std::max(highest, row[c]);
        }
      }
      if (needs.median) {
        for (std::ptrdiff_t c = b.col0 + 1; c <= b.col1; ++c) ++histogram[row[c]];
      }
    }
    if (needs.moments) {
      const Moments mv = moments_from_sums(stats.n, sum, sq_sum);
      stats.mean = mv.mean;
      stats.variance = mv.variance;
    }
    if (needs.extrema) {
      stats.has_extrema = true;
      stats.min = lowest;
      stats.max = highest;
    }
    if (needs.median) {
      const std::size_t rank = quantile_rank(0.5, stats.n);
      std::size_t cumulative = 0;
      std::size_t level = 0;
      for (; level < histogram.size() - 1; ++level) {
        cumulative += histogram[level];
        if (cumulative >= rank) break;
      }
      stats.has_median = true;
      stats.median = static_cast<std::uint8_t>(level);
    }
    return stats;
  };
  return threshold_each(image, rule, params, global, stats_at);
}

BinaryImage binarize_integral(const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                              const RuleParams& params) {
  validate_params(rule, params);
  if (rule == RuleKind::otsu) {
    return apply_global_threshold(image, otsu_threshold(image));
  }
  if (!is_moment_rule(rule)) {
    throw UnsupportedRule("the integral engine supports mean/variance rules only, not '" +
                          std::string(rule_name(rule)) + "'");
  }
  const GlobalStats global =
      rule_needs(rule).global ? compute_global_stats(image) : GlobalStats{};
  const IntegralImage sums = build_integral(image, IntegralKind::identity);
  const IntegralImage sq_sums = build_integral(image, IntegralKind::square);
  const auto height = static_cast<std::ptrdiff_t>(image.height());
  const auto width = static_cast<std::ptrdiff_t>(image.width());

  auto stats_at = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
    const Bounds b = clamp_window(spec, i, j, height, width);
    LocalStats stats;
    stats.window_area = spec.area();
    stats.n = static_cast<std::size_t>((b.row1 - b.row0) * (b.col1 - b.col0));
    const Moments mv =
        moments_from_sums(stats.n, sums.window_sum_unchecked(b.row0, b.row1, b.col0, b.col1),
                          sq_sums.window_sum_unchecked(b.row0, b.row1, b.col0, b.col1));
    stats.mean = mv.mean;
    stats.variance = mv.variance;
    return stats;
  };
  return threshold_each(image, rule, params, global, stats_at);
}

}  // namespace slidebin
