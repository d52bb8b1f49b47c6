#include "slidebin/binarize.hpp"

#include <algorithm>

namespace slidebin {

BinaryImage binarize_sliding(const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                             const RuleParams& params, const SweepOptions& options) {
  validate_params(rule, params);
  if (rule == RuleKind::otsu) {
    return apply_global_threshold(image, otsu_threshold(image));
  }
  check_sweep_window(spec, options);
  const StatNeeds needs = rule_needs(rule);
  const GlobalStats global = needs.global ? compute_global_stats(image) : GlobalStats{};
  const std::size_t width = image.width();
  const std::uint8_t* pixels = image.data();
  const std::size_t area = spec.area();

  BinaryImage out(image.height(), image.width());
  Label* labels = out.data();
  auto label = [&](std::size_t i, std::size_t j, const LocalStats& stats, const RuleParams& p) {
    const std::size_t k = i * width + j;
    labels[k] = is_foreground(rule, pixels[k], stats, global, p) ? Label::foreground
                                                                 : Label::background;
  };

  if (needs.moments) {
    RuleParams resolved = params;
    if (needs_range_pass(rule, params)) {
      double max_variance = 0.0;
      sweep_mean_variance(
          image, spec,
          [&](std::size_t, std::size_t, std::size_t, double, double variance) {
            max_variance = std::max(max_variance, variance);
          },
          options);
      resolved = resolve_range(rule, params, max_variance);
    }
    sweep_mean_variance(
        image, spec,
        [&](std::size_t i, std::size_t j, std::size_t n, double mean, double variance) {
          LocalStats stats;
          stats.n = n;
          stats.window_area = area;
          stats.mean = mean;
          stats.variance = variance;
          label(i, j, stats, resolved);
        },
        options);
  } else if (needs.extrema) {
    sweep_extrema(
        image, spec,
        [&](std::size_t i, std::size_t j, std::uint8_t lowest, std::uint8_t highest) {
          LocalStats stats;
          stats.window_area = area;
          stats.has_extrema = true;
          stats.min = lowest;
          stats.max = highest;
          label(i, j, stats, params);
        },
        options.axis);
  } else if (needs.median) {
    sweep_quantile(
        image, spec, 0.5,
        [&](std::size_t i, std::size_t j, std::uint8_t median) {
          LocalStats stats;
          stats.window_area = area;
          stats.has_median = true;
          stats.median = median;
          label(i, j, stats, params);
        },
        options.axis);
  }
  return out;
}

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::naive:
      return "naive";
    case Engine::integral:
      return "integral";
    case Engine::sliding:
      return "sliding";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  for (const Engine engine : {Engine::naive, Engine::integral, Engine::sliding}) {
    if (engine_name(engine) == name) return engine;
  }
  return std::nullopt;
}

bool engine_supports(Engine engine, RuleKind rule) noexcept {
  return engine != Engine::integral || rule == RuleKind::otsu || is_moment_rule(rule);
}

BinaryImage binarize(Engine engine, const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                     const RuleParams& params, const SweepOptions& options) {
  switch (engine) {
    case Engine::naive:
      return binarize_naive(image, spec, rule, params);
    case Engine::integral:
      return binarize_integral(image, spec, rule, params);
    case Engine::sliding:
      break;
  }
  return binarize_sliding(image, spec, rule, params, options);
}

}  // namespace slidebin
