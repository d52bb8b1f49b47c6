#include "slidebin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "slidebin/aux_audit.hpp"
#include "slidebin/binarize.hpp"

namespace slidebin {

std::string_view bench_engine_name(BenchEngine engine) noexcept {
  switch (engine) {
    case BenchEngine::naive:
      return "naive";
    case BenchEngine::integral:
      return "integral";
    case BenchEngine::sliding:
      return "sliding";
    case BenchEngine::otsu:
      return "otsu";
  }
  return "unknown";
}

std::optional<BenchEngine> parse_bench_engine(std::string_view name) noexcept {
  for (const auto engine :
       {BenchEngine::naive, BenchEngine::integral, BenchEngine::sliding, BenchEngine::otsu}) {
    if (bench_engine_name(engine) == name) return engine;
  }
  return std::nullopt;
}

ImageSize parse_image_size(const std::string& text) {
  // Same grammar as windows: "HxW".
  const auto spec = parse_window(text);
  return {spec.height(), spec.width()};
}

GrayImage random_image(std::size_t height, std::size_t width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> pixels(height * width);
  // Top byte of each draw; std::uniform_int_distribution is not portable.
  for (auto& level : pixels) {
    level = static_cast<std::uint8_t>(rng() >> 56);
  }
  return GrayImage(height, width, std::move(pixels));
}

namespace {

struct Measurement {
  double seconds;
  std::size_t aux_slots;
};

template <class Run>
Measurement measure(std::size_t repeats, Run&& run) {
  std::vector<double> times;
  std::size_t aux_slots = 0;
  for (std::size_t k = 0; k < repeats; ++k) {
    AuxAuditScope audit;
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
    aux_slots = std::max(aux_slots, audit.peak().slots);
  }
  std::sort(times.begin(), times.end());
  const double median = times.size() % 2 == 1
                            ? times[times.size() / 2]
                            : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2.0;
  return {std::max(median, 1e-6), aux_slots};
}

Engine to_engine(BenchEngine engine) {
  switch (engine) {
    case BenchEngine::naive:
      return Engine::naive;
    case BenchEngine::integral:
      return Engine::integral;
    default:
      return Engine::sliding;
  }
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.repeats < 3) {
    throw std::invalid_argument("benchmark needs at least 3 repeats");
  }
  std::vector<GrayImage> images;
  for (std::size_t k = 0; k < config.sizes.size(); ++k) {
    images.push_back(random_image(config.sizes[k].height, config.sizes[k].width,
                                  config.seed * 1000003u + k));
  }
  images.insert(images.end(), config.images.begin(), config.images.end());

  std::vector<BenchRecord> records;
  for (const GrayImage& image : images) {
    for (const BenchEngine bench_engine : config.engines) {
      if (bench_engine == BenchEngine::otsu) {
        const Measurement m = measure(config.repeats, [&] {
          const BinaryImage out = apply_global_threshold(image, otsu_threshold(image));
          (void)out;
        });
        records.push_back({bench_engine, RuleKind::otsu, image.height(), image.width(), 0, 0,
                           m.seconds, m.aux_slots});
        continue;
      }
      const Engine engine = to_engine(bench_engine);
      for (const RuleKind rule : config.rules) {
        if (rule == RuleKind::otsu || !engine_supports(engine, rule)) {
          continue;
        }
        for (const WindowSpec& window : config.windows) {
          SweepOptions options;
          options.max_window_side = std::max<std::size_t>(
              kCompactMaxWindowSide, std::max(window.height(), window.width()));
          const Measurement m = measure(config.repeats, [&] {
            const BinaryImage out = binarize(engine, image, window, rule, config.params, options);
            (void)out;
          });
          records.push_back({bench_engine, rule, image.height(), image.width(), window.height(),
                             window.width(), m.seconds, m.aux_slots});
        }
      }
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  char time[32];
  for (const auto& r : records) {
    std::snprintf(time, sizeof time, "%.6f", r.wall_time_s);
    out << bench_engine_name(r.engine) << ',' << rule_name(r.rule) << ',' << r.height << ','
        << r.width << ',' << r.window_height << ',' << r.window_width << ',' << time << ','
        << r.peak_aux_slots << '\n';
  }
}

void write_bench_summary(std::ostream& out, const std::vector<BenchRecord>& records) {
  using Key = std::tuple<std::size_t, std::size_t, RuleKind, std::size_t, std::size_t>;
  std::map<Key, std::map<BenchEngine, double>> windowed;
  std::map<std::pair<std::size_t, std::size_t>, double> otsu;
  for (const auto& r : records) {
    if (r.engine == BenchEngine::otsu) {
      otsu[{r.height, r.width}] = r.wall_time_s;
    } else {
      windowed[{r.height, r.width, r.rule, r.window_height, r.window_width}][r.engine] =
          r.wall_time_s;
    }
  }
  char line[256];
  for (const auto& [key, times] : windowed) {
    const auto& [height, width, rule, h, w] = key;
    const auto sliding = times.find(BenchEngine::sliding);
    if (sliding == times.end()) continue;
    std::snprintf(line, sizeof line, "%zux%zu %s window %zux%zu: sliding %.6f s",
                  height, width, std::string(rule_name(rule)).c_str(), h, w, sliding->second);
    out << line;
    if (auto it = times.find(BenchEngine::integral); it != times.end()) {
      std::snprintf(line, sizeof line, ", integral/sliding %.2f", it->second / sliding->second);
      out << line;
    }
    if (auto it = times.find(BenchEngine::naive); it != times.end()) {
      std::snprintf(line, sizeof line, ", naive/sliding %.2f", it->second / sliding->second);
      out << line;
    }
    if (auto it = otsu.find({height, width}); it != otsu.end()) {
      std::snprintf(line, sizeof line, ", sliding/otsu %.2f", sliding->second / it->second);
      out << line;
    }
    out << '\n';
  }
}

}  // namespace slidebin
