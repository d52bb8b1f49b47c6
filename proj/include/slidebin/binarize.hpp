#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "slidebin/image.hpp"
#include "slidebin/reference.hpp"
#include "slidebin/rules.hpp"
#include "slidebin/sliding_stats.hpp"
#include "slidebin/window.hpp"

namespace slidebin {

/// Binarizes with the sliding column accumulators. Mean/variance rules use
/// 2 * min(H, W) accumulator slots, bernsen rules the monotone deques and the
/// median rule the column histograms. Throws std::invalid_argument when the
/// window exceeds options.max_window_side.
BinaryImage binarize_sliding(const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                             const RuleParams& params, const SweepOptions& options = {});

enum class Engine { naive, integral, sliding };

std::string_view engine_name(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

/// Whether `engine` can evaluate `rule`.
bool engine_supports(Engine engine, RuleKind rule) noexcept;

BinaryImage binarize(Engine engine, const GrayImage& image, const WindowSpec& spec, RuleKind rule,
                     const RuleParams& params, const SweepOptions& options = {});

}  // namespace slidebin
