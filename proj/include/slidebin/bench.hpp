#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slidebin/image.hpp"
#include "slidebin/rules.hpp"
#include "slidebin/window.hpp"

namespace slidebin {

enum class BenchEngine { naive, integral, sliding, otsu };

std::string_view bench_engine_name(BenchEngine engine) noexcept;
std::optional<BenchEngine> parse_bench_engine(std::string_view name) noexcept;

struct ImageSize {
  std::size_t height;
  std::size_t width;
};

/// Parses "HxW".
ImageSize parse_image_size(const std::string& text);

struct BenchRecord {
  BenchEngine engine;
  RuleKind rule;
  std::size_t height;
  std::size_t width;
  /// 0 x 0 for otsu, which has no window.
  std::size_t window_height;
  std::size_t window_width;
  double wall_time_s;
  std::size_t peak_aux_slots;
};

struct BenchConfig {
  std::vector<ImageSize> sizes;
  /// Benchmarked after the generated images, e.g. user-supplied scans.
  std::vector<GrayImage> images;
  std::vector<WindowSpec> windows;
  std::vector<BenchEngine> engines;
  std::vector<RuleKind> rules;
  std::size_t repeats = 3;
  std::uint64_t seed = 1;
  RuleParams params;
};

/// Uniform random gray levels; identical for identical (size, seed).
GrayImage random_image(std::size_t height, std::size_t width, std::uint64_t seed);

/// Times every image x engine x rule x window combination, reporting the
/// median wall time of `repeats` runs (>= 3, else std::invalid_argument).
/// Rows are ordered image, engine, rule, window. Combinations an engine does
/// not support are skipped; the otsu engine yields one row per image.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

inline constexpr std::string_view kBenchCsvHeader =
    "engine,rule,H,W,h,w,wall_time_s,peak_aux_slots";

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

/// Human-readable speed ratios (sliding vs integral, sliding vs otsu, ...).
void write_bench_summary(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace slidebin
