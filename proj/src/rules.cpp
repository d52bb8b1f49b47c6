#include "slidebin/rules.hpp"

#include <algorithm>
#include <array>

#include <boost/multiprecision/cpp_int.hpp>

#include "slidebin/moments.hpp"

namespace slidebin {

namespace {

struct RuleEntry {
  RuleKind kind;
  std::string_view name;
};

constexpr std::array<RuleEntry, 11> kRules{{
    {RuleKind::niblack, "niblack"},
    {RuleKind::sauvola, "sauvola"},
    {RuleKind::wolf, "wolf"},
    {RuleKind::feng, "feng"},
    {RuleKind::rais, "rais"},
    {RuleKind::khurshid, "khurshid"},
    {RuleKind::phansalkar, "phansalkar"},
    {RuleKind::bernsen, "bernsen"},
    {RuleKind::bernsen_contrast, "bernsen-contrast"},
    {RuleKind::median, "median"},
    {RuleKind::otsu, "otsu"},
}};

}  // namespace

std::string_view rule_name(RuleKind rule) noexcept {
  for (const auto& entry : kRules) {
    if (entry.kind == rule) return entry.name;
  }
  return "unknown";
}

std::optional<RuleKind> parse_rule(std::string_view name) noexcept {
  for (const auto& entry : kRules) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

const std::vector<RuleKind>& all_rules() {
  static const std::vector<RuleKind> rules = [] {
    std::vector<RuleKind> out;
    for (const auto& entry : kRules) out.push_back(entry.kind);
    return out;
  }();
  return rules;
}

RuleKind rule_from_name(std::string_view name) {
  if (auto rule = parse_rule(name)) {
    return *rule;
  }
  throw RuleError("unknown rule '" + std::string(name) + "'");
}

StatNeeds rule_needs(RuleKind rule) noexcept {
  StatNeeds needs;
  switch (rule) {
    case RuleKind::niblack:
    case RuleKind::sauvola:
    case RuleKind::khurshid:
    case RuleKind::phansalkar:
      needs.moments = true;
      break;
    case RuleKind::wolf:
    case RuleKind::feng:
    case RuleKind::rais:
      needs.moments = true;
      needs.global = true;
      break;
    case RuleKind::bernsen:
    case RuleKind::bernsen_contrast:
      needs.extrema = true;
      break;
    case RuleKind::median:
      needs.median = true;
      break;
    case RuleKind::otsu:
      needs.local = false;
      break;
  }
  return needs;
}

void validate_params(RuleKind rule, const RuleParams& params) {
  if (!std::isfinite(params.k)) {
    throw std::invalid_argument("k must be finite");
  }
  if (!(params.range > 0.0) || !std::isfinite(params.range)) {
    throw std::invalid_argument("R must be positive");
  }
  if (rule == RuleKind::sauvola && params.k < 0.0) {
    throw std::invalid_argument("sauvola requires k >= 0");
  }
}

namespace detail {

void throw_missing_stat(RuleKind rule, const char* stat) {
  throw RuleError("rule '" + std::string(rule_name(rule)) + "' needs window " + stat);
}

}  // namespace detail

GlobalStats compute_global_stats(const GrayImage& image) {
  std::uint64_t sum = 0;
  std::uint64_t sq_sum = 0;
  std::uint8_t lowest = 255;
  for (const std::uint8_t level : image.pixels()) {
    sum += level;
    sq_sum += static_cast<std::uint64_t>(level) * level;
    lowest = std::min(lowest, level);
  }
  const Moments mv = moments_from_sums(image.size(), sum, sq_sum);
  return {lowest, mv.mean, std::sqrt(mv.variance)};
}

std::uint8_t otsu_threshold(const GrayImage& image) {
  using boost::multiprecision::int512_t;

  std::array<std::uint64_t, 256> histogram{};
  for (const std::uint8_t level : image.pixels()) {
    ++histogram[level];
  }
  std::uint64_t total_sum = 0;
  for (std::size_t g = 0; g < histogram.size(); ++g) {
    total_sum += g * histogram[g];
  }
  const int512_t total_count = image.size();

  // Up to the constant factor 1/N^2 the between-class variance of a split is
  // (s0 N - S n0)^2 / (n0 n1), kept here as an exact fraction.
  int512_t best_num = 0;
  int512_t best_den = 1;
  std::uint8_t best = 0;
  std::uint64_t count0 = 0;
  std::uint64_t sum0 = 0;
  for (std::size_t t = 0; t < histogram.size(); ++t) {
    count0 += histogram[t];
    sum0 += t * histogram[t];
    const std::uint64_t count1 = image.size() - count0;
    if (count0 == 0 || count1 == 0) {
      continue;
    }
    const int512_t spread = int512_t(sum0) * total_count - int512_t(total_sum) * count0;
    const int512_t num = spread * spread;
    const int512_t den = int512_t(count0) * count1;
    if (num * best_den > best_num * den) {
      best_num = num;
      best_den = den;
      best = static_cast<std::uint8_t>(t);
    }
  }
  return best;
}

BinaryImage apply_global_threshold(const GrayImage& image, std::uint8_t threshold) {
  BinaryImage out(image.height(), image.width());
  Label* labels = out.data();
  const auto pixels = image.pixels();
  for (std::size_t k = 0; k < pixels.size(); ++k) {
    labels[k] = pixels[k] <= threshold ? Label::foreground : Label::background;
  }
  return out;
}

RuleParams resolve_range(RuleKind rule, const RuleParams& params, double max_variance) {
  RuleParams resolved = params;
  if (needs_range_pass(rule, params)) {
    const double s = std::sqrt(max_variance);
    resolved.range = s > 0.0 ? s : 1.0;
  }
  return resolved;
}

}  // namespace slidebin
