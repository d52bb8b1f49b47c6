#pragma once

#include <cstdint>

namespace slidebin {

struct Moments {
  double mean;
  double variance;
};

// Every engine derives window mean and variance through this function, from
// exact integer sums, so that their outputs compare bit for bit.
inline Moments moments_from_sums(std::uint64_t count, std::uint64_t sum,
                                 std::uint64_t sq_sum) noexcept {
  const double n = static_cast<double>(count);
  const double mean = static_cast<double>(sum) / n;
  double variance = static_cast<double>(sq_sum) / n - mean * mean;
  if (variance < 0.0) {
    variance = 0.0;
  }
  return {mean, variance};
}

}  // namespace slidebin
