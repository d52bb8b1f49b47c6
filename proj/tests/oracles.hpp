#pragma once

// Brute-force definitions used as test oracles. Nothing here shares code with
// the engines: windows are enumerated from the (i - o, i + u] x (j - l, j + r]
// inequalities, statistics use two-pass long double arithmetic, quantiles
// sort, and Otsu evaluates the textbook between-class variance with exact
// rationals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slidebin/image.hpp"
#include "slidebin/window.hpp"

namespace oracle {

using slidebin::GrayImage;
using slidebin::WindowSpec;

/// Gray levels of the clamped window of (i, j), by enumeration.
inline std::vector<std::uint8_t> window_levels(const GrayImage& image, const WindowSpec& spec,
                                               long i, long j) {
  const long o = static_cast<long>((spec.height() + 1) / 2);
  const long u = static_cast<long>(spec.height() / 2);
  const long l = static_cast<long>((spec.width() + 1) / 2);
  const long r = static_cast<long>(spec.width() / 2);
  std::vector<std::uint8_t> levels;
  for (long a = 0; a < static_cast<long>(image.height()); ++a) {
    if (!(i - o < a && a <= i + u)) continue;
    for (long b = 0; b < static_cast<long>(image.width()); ++b) {
      if (j - l < b && b <= j + r) {
        levels.push_back(image.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)));
      }
    }
  }
  return levels;
}

inline std::size_t count(const WindowSpec& spec, long i, long j, long height, long width) {
  const long o = static_cast<long>((spec.height() + 1) / 2);
  const long u = static_cast<long>(spec.height() / 2);
  const long l = static_cast<long>((spec.width() + 1) / 2);
  const long r = static_cast<long>(spec.width() / 2);
  std::size_t n = 0;
  for (long a = i - o - 1; a <= i + u + 1; ++a) {
    for (long b = j - l - 1; b <= j + r + 1; ++b) {
      const bool in_window = i - o < a && a <= i + u && j - l < b && b <= j + r;
      const bool in_image = a >= 0 && a < height && b >= 0 && b < width;
      n += in_window && in_image ? 1 : 0;
    }
  }
  return n;
}

struct MeanVariance {
  long double mean;
  long double variance;
};

inline MeanVariance mean_variance(const std::vector<std::uint8_t>& levels) {
  long double total = 0;
  for (auto level : levels) total += level;
  const long double mean = total / static_cast<long double>(levels.size());
  long double spread = 0;
  for (auto level : levels) spread += (level - mean) * (level - mean);
  return {mean, spread / static_cast<long double>(levels.size())};
}

/// Element at index ceil(n / 2) - 1 of the sorted window.
inline std::uint8_t median(std::vector<std::uint8_t> levels) {
  std::sort(levels.begin(), levels.end());
  return levels[(levels.size() + 1) / 2 - 1];
}

inline std::uint64_t integral_at(const GrayImage& image, bool square, long i, long j) {
  std::uint64_t total = 0;
  for (long a = 0; a <= i; ++a) {
    for (long b = 0; b <= j; ++b) {
      const std::uint64_t level = image.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      total += square ? level * level : level;
    }
  }
  return total;
}

inline std::uint64_t rect_sum(const GrayImage& image, bool square, long row0, long row1, long col0,
                              long col1) {
  std::uint64_t total = 0;
  for (long a = row0 + 1; a <= row1; ++a) {
    for (long b = col0 + 1; b <= col1; ++b) {
      const std::uint64_t level = image.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      total += square ? level * level : level;
    }
  }
  return total;
}

/// Exhaustive Otsu: w0 w1 (mu0 - mu1)^2 for every t in [0, 255], classes
/// formed by scanning the pixels, first maximum wins.
inline std::uint8_t otsu(const GrayImage& image) {
  using boost::multiprecision::cpp_rational;
  const cpp_rational total(static_cast<long long>(image.size()));
  cpp_rational best = -1;
  int best_t = 0;
  for (int t = 0; t < 256; ++t) {
    long long n0 = 0, n1 = 0, s0 = 0, s1 = 0;
    for (auto level : image.pixels()) {
      if (level <= t) {
        ++n0;
        s0 += level;
      } else {
        ++n1;
        s1 += level;
      }
    }
    cpp_rational variance = 0;
    if (n0 > 0 && n1 > 0) {
      const cpp_rational w0 = cpp_rational(n0) / total;
      const cpp_rational w1 = cpp_rational(n1) / total;
      const cpp_rational diff = cpp_rational(s0, n0) - cpp_rational(s1, n1);
      variance = w0 * w1 * diff * diff;
    }
    if (variance > best) {
      best = variance;
      best_t = t;
    }
  }
  return static_cast<std::uint8_t>(best_t);
}

inline GrayImage random_image(std::mt19937_64& rng, std::size_t height, std::size_t width,
                              int low = 0, int high = 255) {
  std::uniform_int_distribution<int> level(low, high);
  std::vector<std::uint8_t> pixels(height * width);
  for (auto& p : pixels) p = static_cast<std::uint8_t>(level(rng));
  return GrayImage(height, width, std::move(pixels));
}

/// Images with structure the uniform generator rarely produces: flat
/// patches, two-level text-like blobs, gradients.
inline GrayImage structured_image(std::mt19937_64& rng, std::size_t height, std::size_t width) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> level(0, 255);
  const int kind = pick(rng);
  const int a = level(rng);
  const int b = level(rng);
  std::vector<std::uint8_t> pixels(height * width);
  for (std::size_t i = 0; i < height; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      int value = 0;
      switch (kind) {
        case 0: value = a; break;
        case 1: value = ((i / 3 + j / 2) % 3 == 0) ? a : b; break;
        case 2: value = static_cast<int>((i * 7 + j * 13) % 256); break;
        default: value = level(rng) < 32 ? a : b; break;
      }
      pixels[i * width + j] = static_cast<std::uint8_t>(value);
    }
  }
  return GrayImage(height, width, std::move(pixels));
}

}  // namespace oracle
