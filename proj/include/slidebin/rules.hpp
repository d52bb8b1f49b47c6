#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slidebin/image.hpp"

namespace slidebin {

enum class RuleKind {
  niblack,
  sauvola,
  wolf,
  feng,
  rais,
  khurshid,
  phansalkar,
  bernsen,
  bernsen_contrast,
  median,
  otsu,
};

/// Stable identifier ("bernsen-contrast" etc.).
std::string_view rule_name(RuleKind rule) noexcept;
std::optional<RuleKind> parse_rule(std::string_view name) noexcept;
const std::vector<RuleKind>& all_rules();

/// Thrown for rule names that are not recognised and for statistics a rule
/// needs but was not given.
class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a rule name, throwing RuleError for unknown names.
RuleKind rule_from_name(std::string_view name);

/// Which statistics a rule consumes.
struct StatNeeds {
  bool moments = false;  // window mean and variance
  bool extrema = false;  // window min and max
  bool median = false;   // window median
  bool global = false;   // image-wide min, mean, stddev
  bool local = true;     // false only for global thresholding (otsu)
};

StatNeeds rule_needs(RuleKind rule) noexcept;

/// True for the rules computable from n, mean and variance alone.
inline bool is_moment_rule(RuleKind rule) noexcept {
  const auto needs = rule_needs(rule);
  return needs.local && !needs.extrema && !needs.median;
}

struct RuleParams {
  double k = 0.5;
  /// Dynamic range of the standard deviation.
  double range = 128.0;
  // Phansalkar. The usual p = 2, q = 10 are stated for gray levels in [0, 1];
  // q is rescaled here to levels in [0, 255].
  double phansalkar_p = 2.0;
  double phansalkar_q = 10.0 / 255.0;
  // Feng: alpha1 * m + k1 * (s/R)^(1+gamma) * (m - L) + k2 * (s/R)^gamma * L.
  double feng_alpha1 = 0.9;
  double feng_k1 = 0.2;
  double feng_k2 = 0.03;
  double feng_gamma = 2.0;
  /// Khurshid: use the clamped count n instead of h * w at image borders.
  bool khurshid_clamped_count = false;
  /// bernsen-contrast: windows with max - min below this are all background.
  double contrast = 15.0;
  /// Wolf: replace `range` by the largest window standard deviation of the
  /// image. Costs an extra statistics pass.
  bool wolf_adaptive_range = false;
};

/// Throws std::invalid_argument for parameters a rule cannot use, e.g. a
/// negative k for Sauvola or a non-positive range.
void validate_params(RuleKind rule, const RuleParams& params);

struct GlobalStats {
  std::uint8_t min = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

GlobalStats compute_global_stats(const GrayImage& image);

struct LocalStats {
  std::size_t n = 0;
  /// Nominal h * w of the window, independent of border clamping.
  std::size_t window_area = 0;
  double mean = 0.0;
  double variance = 0.0;
  bool has_extrema = false;
  std::uint8_t min = 0;
  std::uint8_t max = 0;
  bool has_median = false;
  std::uint8_t median = 0;

  double stddev() const noexcept { return std::sqrt(variance); }
};

/// Square-root-free Sauvola test: level <= m (1 + k (sqrt(v)/R - 1)) holds
/// iff level + m (k - 1) <= 0 or (level + m (k - 1))^2 <= k^2 m^2 v / R^2,
/// given k >= 0.
inline bool sauvola_decide(double level, double mean, double variance, double k,
                           double range) noexcept {
  const double shifted = level + mean * (k - 1.0);
  if (shifted <= 0.0) {
    return true;
  }
  return shifted * shifted <= k * k * mean * mean * variance / (range * range);
}

namespace detail {
[[noreturn]] void throw_missing_stat(RuleKind rule, const char* stat);
}

/// Threshold t of a local rule; a pixel is foreground iff its level <= t.
/// bernsen-contrast yields -infinity for low-contrast windows. Throws
/// RuleError for otsu and when `stats` lacks something the rule needs.
inline double threshold_value(RuleKind rule, const LocalStats& stats, const GlobalStats& global,
                              const RuleParams& params) {
  const double m = stats.mean;
  switch (rule) {
    case RuleKind::niblack:
      return m + params.k * stats.stddev();
    case RuleKind::sauvola:
      return m * (1.0 + params.k * (stats.stddev() / params.range - 1.0));
    case RuleKind::wolf:
      return m - params.k * (m - global.min) * (1.0 - stats.stddev() / params.range);
    case RuleKind::feng: {
      const double ratio = stats.stddev() / params.range;
      return params.feng_alpha1 * m +
             params.feng_k1 * std::pow(ratio, 1.0 + params.feng_gamma) * (m - global.min) +
             params.feng_k2 * std::pow(ratio, params.feng_gamma) * global.min;
    }
    case RuleKind::rais: {
      const double s = stats.stddev();
      const double local = m * s;
      const double image = global.mean * global.stddev;
      const double larger = std::max(local, image);
      const double correction = larger > 0.0 ? (local - image) / larger : 0.0;
      return m + 0.3 * correction * s;
    }
    case RuleKind::khurshid: {
      const double count =
          static_cast<double>(params.khurshid_clamped_count ? stats.n : stats.window_area);
      return m + params.k * std::sqrt(stats.variance + m * m * (count - 1.0) / count);
    }
    case RuleKind::phansalkar:
      return m * (1.0 + params.phansalkar_p * std::exp(-params.phansalkar_q * m) +
                  params.k * (stats.stddev() / params.range - 1.0));
    case RuleKind::bernsen:
      if (!stats.has_extrema) detail::throw_missing_stat(rule, "extrema");
      return (static_cast<double>(stats.min) + static_cast<double>(stats.max)) / 2.0;
    case RuleKind::bernsen_contrast:
      if (!stats.has_extrema) detail::throw_missing_stat(rule, "extrema");
      if (static_cast<double>(stats.max) - static_cast<double>(stats.min) < params.contrast) {
        return -std::numeric_limits<double>::infinity();
      }
      return (static_cast<double>(stats.min) + static_cast<double>(stats.max)) / 2.0;
    case RuleKind::median:
      if (!stats.has_median) detail::throw_missing_stat(rule, "median");
      return static_cast<double>(stats.median);
    case RuleKind::otsu:
      break;
  }
  throw RuleError("otsu is a global rule and has no local threshold");
}

/// Per-pixel decision shared by every engine. Sauvola goes through the
/// square-root-free test, the others compare against threshold_value.
inline bool is_foreground(RuleKind rule, std::uint8_t level, const LocalStats& stats,
                          const GlobalStats& global, const RuleParams& params) {
  if (rule == RuleKind::sauvola) {
    return sauvola_decide(level, stats.mean, stats.variance, params.k, params.range);
  }
  return static_cast<double>(level) <= threshold_value(rule, stats, global, params);
}

/// Otsu's global threshold: the level t maximizing the between-class
/// variance of the split {<= t} / {> t}, smallest t on ties. Class variances
/// are compared exactly.
std::uint8_t otsu_threshold(const GrayImage& image);

/// Binarizes against a single global threshold: foreground iff level <= t.
BinaryImage apply_global_threshold(const GrayImage& image, std::uint8_t threshold);

/// Params with `range` replaced by the largest window standard deviation when
/// Wolf's adaptive range is on. A flat image (max variance 0) keeps range 1.
RuleParams resolve_range(RuleKind rule, const RuleParams& params, double max_variance);

inline bool needs_range_pass(RuleKind rule, const RuleParams& params) noexcept {
  return rule == RuleKind::wolf && params.wolf_adaptive_range;
}

}  // namespace slidebin
