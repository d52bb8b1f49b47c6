#pragma once

// Window statistics computed in a single sweep with per-column running
// accumulators instead of integral images.
//
// The sweep walks the image one line at a time. For every column of the line
// it keeps the sum (C) and the sum of squares (D) of the gray levels in the
// h-line band around the current line; moving to the next line adds the line
// entering the band and subtracts the one leaving it. Along the line, the
// window sums (c, d) are maintained the same way from C and D. Auxiliary
// storage is two slots per column, and the sweep runs along whichever axis
// makes that min(H, W).
//
// The extrema and quantile sweeps follow the same scheme with monotone
// deques and 256-bin histograms in place of C and D.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "slidebin/aux_audit.hpp"
#include "slidebin/image.hpp"
#include "slidebin/moments.hpp"
#include "slidebin/window.hpp"

namespace slidebin {

enum class SweepAxis { row_major, column_major };

/// Row-major when W <= H (ties included), column-major otherwise, so the
/// accumulator arrays have min(H, W) slots. An explicit override wins.
SweepAxis choose_sweep_axis(std::size_t height, std::size_t width,
                            std::optional<SweepAxis> override_axis = std::nullopt) noexcept;

const char* to_string(SweepAxis axis) noexcept;
std::optional<SweepAxis> parse_sweep_axis(const std::string& text) noexcept;

/// Largest window side for which the column sums fit 16 bits and the column
/// sums of squares fit 32 bits: 255 * 257 = 65535.
inline constexpr std::size_t kCompactMaxWindowSide = 257;

/// Hard ceiling for the wide accumulator layout (64-bit window sums).
inline constexpr std::size_t kWideMaxWindowSide = std::size_t{1} << 24;

struct SweepOptions {
  std::optional<SweepAxis> axis;
  /// Accumulators are sized for windows up to this side; a larger window is
  /// rejected with std::invalid_argument.
  std::size_t max_window_side = kCompactMaxWindowSide;
};

/// Largest value each accumulator can hold for a given configured maximum
/// window side.
struct AccumulatorCapacity {
  std::uint64_t column_sum;
  std::uint64_t column_sq_sum;
  std::uint64_t window_sum;
  std::uint64_t window_sq_sum;
};

AccumulatorCapacity accumulator_capacity(std::size_t max_window_side);

/// Largest values held by the accumulators during a sweep.
struct AccumulatorPeaks {
  std::uint64_t column_sum = 0;
  std::uint64_t column_sq_sum = 0;
  std::uint64_t window_sum = 0;
  std::uint64_t window_sq_sum = 0;
};

/// Validates the window against the options. Throws std::invalid_argument.
void check_sweep_window(const WindowSpec& spec, const SweepOptions& options);

/// Rank used by quantile queries: ceil(q * n), clamped to [1, n].
std::size_t quantile_rank(double q, std::size_t n) noexcept;

namespace detail {

// The sweep frame is the image seen with its axes exchanged when sweeping
// column-major; frame line a, frame column b is image pixel (b, a).
template <bool Transposed>
struct Frame {
  const std::uint8_t* pixels;
  std::ptrdiff_t image_width;
  std::ptrdiff_t lines;
  std::ptrdiff_t columns;

  explicit Frame(const GrayImage& image)
      : pixels(image.data()),
        image_width(static_cast<std::ptrdiff_t>(image.width())),
        lines(static_cast<std::ptrdiff_t>(Transposed ? image.width() : image.height())),
        columns(static_cast<std::ptrdiff_t>(Transposed ? image.height() : image.width())) {}

  std::uint8_t at(std::ptrdiff_t line, std::ptrdiff_t column) const noexcept {
    if constexpr (Transposed) {
      return pixels[column * image_width + line];
    } else {
      return pixels[line * image_width + column];
    }
  }

  static WindowSpec window(const WindowSpec& spec) noexcept {
    return Transposed ? spec.transposed() : spec;
  }

  template <class Visit, class... Args>
  static void emit(Visit& visit, std::ptrdiff_t line, std::ptrdiff_t column, Args&&... args) {
    if constexpr (Transposed) {
      visit(static_cast<std::size_t>(column), static_cast<std::size_t>(line),
            std::forward<Args>(args)...);
    } else {
      visit(static_cast<std::size_t>(line), static_cast<std::size_t>(column),
            std::forward<Args>(args)...);
    }
  }
};

template <class T>
void raise_peak(std::uint64_t& peak, T value) noexcept {
  peak = std::max<std::uint64_t>(peak, value);
}

// ColumnSum/ColumnSq hold C and D, WindowSum/WindowSq hold c and d. All four
// are unsigned: the band transiently holds h + 1 lines between the add and the
// subtract, and modular arithmetic brings the stored value back in range.
template <class ColumnSum, class ColumnSq, class WindowSum, class WindowSq, bool Transposed,
          bool TrackPeaks, class Visit>
void sweep_moments(const GrayImage& image, const WindowSpec& image_spec, Visit& visit,
                   AccumulatorPeaks* peaks) {
  const Frame<Transposed> frame(image);
  const WindowSpec spec = Frame<Transposed>::window(image_spec);
  const std::ptrdiff_t lines = frame.lines;
  const std::ptrdiff_t columns = frame.columns;
  const std::ptrdiff_t l = spec.left();
  const std::ptrdiff_t r = spec.right();
  const std::ptrdiff_t o = spec.top();
  const std::ptrdiff_t u = spec.bottom();

  AuxVector<ColumnSum> sums(static_cast<std::size_t>(columns), 0);
  AuxVector<ColumnSq> sq_sums(static_cast<std::size_t>(columns), 0);

  for (std::ptrdiff_t a = 0; a < std::min(u, lines); ++a) {
    for (std::ptrdiff_t b = 0; b < columns; ++b) {
      const unsigned level = frame.at(a, b);
      sums[b] = static_cast<ColumnSum>(sums[b] + level);
      sq_sums[b] = static_cast<ColumnSq>(sq_sums[b] + level * level);
    }
  }

  for (std::ptrdiff_t i = 0; i < lines; ++i) {
    const std::ptrdiff_t entering = i + u;
    const std::ptrdiff_t leaving = i - o;
    if (entering < lines && leaving >= 0) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) {
        const unsigned in = frame.at(entering, b);
        const unsigned out = frame.at(leaving, b);
        sums[b] = static_cast<ColumnSum>(sums[b] + in - out);
        sq_sums[b] = static_cast<ColumnSq>(sq_sums[b] + in * in - out * out);
      }
    } else if (entering < lines) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) {
        const unsigned in = frame.at(entering, b);
        sums[b] = static_cast<ColumnSum>(sums[b] + in);
        sq_sums[b] = static_cast<ColumnSq>(sq_sums[b] + in * in);
      }
    } else if (leaving >= 0) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) {
        const unsigned out = frame.at(leaving, b);
        sums[b] = static_cast<ColumnSum>(sums[b] - out);
        sq_sums[b] = static_cast<ColumnSq>(sq_sums[b] - out * out);
      }
    }
    if constexpr (TrackPeaks) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) {
        raise_peak(peaks->column_sum, sums[b]);
        raise_peak(peaks->column_sq_sum, sq_sums[b]);
      }
    }

    const std::size_t band = clamped_extent(i, o, u, lines);
    WindowSum c = 0;
    WindowSq d = 0;
    for (std::ptrdiff_t b = 0; b < std::min(r, columns); ++b) {
      c = static_cast<WindowSum>(c + sums[b]);
      d = static_cast<WindowSq>(d + sq_sums[b]);
    }
    for (std::ptrdiff_t j = 0; j < columns; ++j) {
      if (j + r < columns) {
        c = static_cast<WindowSum>(c + sums[j + r]);
        d = static_cast<WindowSq>(d + sq_sums[j + r]);
      }
      if (j - l >= 0) {
        c = static_cast<WindowSum>(c - sums[j - l]);
        d = static_cast<WindowSq>(d - sq_sums[j - l]);
      }
      if constexpr (TrackPeaks) {
        raise_peak(peaks->window_sum, c);
        raise_peak(peaks->window_sq_sum, d);
      }
      const std::size_t n = band * clamped_extent(j, l, r, columns);
      const Moments mv = moments_from_sums(n, c, d);
      Frame<Transposed>::emit(visit, i, j, n, mv.mean, mv.variance);
    }
  }
}

template <class Layout, bool Transposed, class Visit>
void sweep_moments_tracked(const GrayImage& image, const WindowSpec& spec, Visit& visit,
                           AccumulatorPeaks* peaks) {
  using CS = typename Layout::ColumnSum;
  using CQ = typename Layout::ColumnSq;
  using WS = typename Layout::WindowSum;
  using WQ = typename Layout::WindowSq;
  if (peaks != nullptr) {
    sweep_moments<CS, CQ, WS, WQ, Transposed, true>(image, spec, visit, peaks);
  } else {
    sweep_moments<CS, CQ, WS, WQ, Transposed, false>(image, spec, visit, nullptr);
  }
}

// 255 * 257 fits 16 bits, 255^2 * 257 and 255^2 * 257^2 fit 32 bits.
struct CompactLayout {
  using ColumnSum = std::uint16_t;
  using ColumnSq = std::uint32_t;
  using WindowSum = std::uint32_t;
  using WindowSq = std::uint32_t;
};

struct WideLayout {
  using ColumnSum = std::uint32_t;
  using ColumnSq = std::uint64_t;
  using WindowSum = std::uint64_t;
  using WindowSq = std::uint64_t;
};

struct DequeEntry {
  std::int32_t index;
  std::uint8_t level;
};

// A bank of fixed-capacity ring deques, one per lane, each holding a strictly
// monotone run of levels with increasing indices. KeepMax selects a
// decreasing run (front is the maximum) versus an increasing one.
template <bool KeepMax>
class MonotoneDequeBank {
 public:
  MonotoneDequeBank(std::size_t lanes, std::size_t capacity)
      : capacity_(capacity), entries_(lanes * capacity), heads_(lanes, 0), sizes_(lanes, 0) {}

  void push(std::size_t lane, std::int32_t index, std::uint8_t level) noexcept {
    DequeEntry* ring = entries_.data() + lane * capacity_;
    std::uint32_t& size = sizes_[lane];
    const std::uint32_t head = heads_[lane];
    while (size > 0 && !dominates(ring[(head + size - 1) % capacity_].level, level)) {
      --size;
    }
    ring[(head + size) % capacity_] = DequeEntry{index, level};
    ++size;
  }

  /// Drops front entries with index <= last_expired.
  void expire(std::size_t lane, std::int32_t last_expired) noexcept {
    const DequeEntry* ring = entries_.data() + lane * capacity_;
    std::uint32_t& head = heads_[lane];
    std::uint32_t& size = sizes_[lane];
    while (size > 0 && ring[head].index <= last_expired) {
      head = static_cast<std::uint32_t>((head + 1) % capacity_);
      --size;
    }
  }

  std::uint8_t front(std::size_t lane) const noexcept {
    return entries_[lane * capacity_ + heads_[lane]].level;
  }

  bool empty(std::size_t lane) const noexcept { return sizes_[lane] == 0; }

  void clear(std::size_t lane) noexcept {
    heads_[lane] = 0;
    sizes_[lane] = 0;
  }

 private:
  static bool dominates(std::uint8_t kept, std::uint8_t incoming) noexcept {
    return KeepMax ? kept > incoming : kept < incoming;
  }

  std::size_t capacity_;
  AuxVector<DequeEntry> entries_;
  AuxVector<std::uint32_t> heads_;
  AuxVector<std::uint32_t> sizes_;
};

template <bool Transposed, class Visit>
void sweep_extrema(const GrayImage& image, const WindowSpec& image_spec, Visit& visit) {
  const Frame<Transposed> frame(image);
  const WindowSpec spec = Frame<Transposed>::window(image_spec);
  const std::ptrdiff_t lines = frame.lines;
  const std::ptrdiff_t columns = frame.columns;
  const std::ptrdiff_t l = spec.left();
  const std::ptrdiff_t r = spec.right();
  const std::ptrdiff_t o = spec.top();
  const std::ptrdiff_t u = spec.bottom();

  // A band never holds more than min(h, lines) entries, plus the one pushed
  // before expiry.
  const std::size_t band_capacity =
      std::min(spec.height(), static_cast<std::size_t>(lines)) + 1;
  const std::size_t run_capacity =
      std::min(spec.width(), static_cast<std::size_t>(columns)) + 1;
  const auto lanes = static_cast<std::size_t>(columns);
  MonotoneDequeBank<true> band_max(lanes, band_capacity);
  MonotoneDequeBank<false> band_min(lanes, band_capacity);
  MonotoneDequeBank<true> run_max(1, run_capacity);
  MonotoneDequeBank<false> run_min(1, run_capacity);

  auto push_line = [&](std::ptrdiff_t a) {
    for (std::ptrdiff_t b = 0; b < columns; ++b) {
      const std::uint8_t level = frame.at(a, b);
      band_max.push(static_cast<std::size_t>(b), static_cast<std::int32_t>(a), level);
      band_min.push(static_cast<std::size_t>(b), static_cast<std::int32_t>(a), level);
    }
  };
  auto push_column = [&](std::ptrdiff_t b) {
    const auto lane = static_cast<std::size_t>(b);
    run_max.push(0, static_cast<std::int32_t>(b), band_max.front(lane));
    run_min.push(0, static_cast<std::int32_t>(b), band_min.front(lane));
  };

  for (std::ptrdiff_t a = 0; a < std::min(u, lines); ++a) {
    push_line(a);
  }
  for (std::ptrdiff_t i = 0; i < lines; ++i) {
    if (i + u < lines) {
      push_line(i + u);
    }
    if (i - o >= 0) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) {
        band_max.expire(static_cast<std::size_t>(b), static_cast<std::int32_t>(i - o));
        band_min.expire(static_cast<std::size_t>(b), static_cast<std::int32_t>(i - o));
      }
    }

    run_max.clear(0);
    run_min.clear(0);
    for (std::ptrdiff_t b = 0; b < std::min(r, columns); ++b) {
      push_column(b);
    }
    for (std::ptrdiff_t j = 0; j < columns; ++j) {
      if (j + r < columns) {
        push_column(j + r);
      }
      if (j - l >= 0) {
        run_max.expire(0, static_cast<std::int32_t>(j - l));
        run_min.expire(0, static_cast<std::int32_t>(j - l));
      }
      Frame<Transposed>::emit(visit, i, j, run_min.front(0), run_max.front(0));
    }
  }
}

template <bool Transposed, class Visit>
void sweep_quantile(const GrayImage& image, const WindowSpec& image_spec, double q, Visit& visit) {
  constexpr std::size_t kBins = 256;
  const Frame<Transposed> frame(image);
  const WindowSpec spec = Frame<Transposed>::window(image_spec);
  const std::ptrdiff_t lines = frame.lines;
  const std::ptrdiff_t columns = frame.columns;
  const std::ptrdiff_t l = spec.left();
  const std::ptrdiff_t r = spec.right();
  const std::ptrdiff_t o = spec.top();
  const std::ptrdiff_t u = spec.bottom();

  AuxVector<std::uint32_t> column_hist(static_cast<std::size_t>(columns) * kBins, 0);
  AuxVector<std::uint32_t> window_hist(kBins, 0);
  auto column = [&](std::ptrdiff_t b) { return column_hist.data() + b * kBins; };
  auto add_column = [&](std::ptrdiff_t b) {
    const std::uint32_t* h = column(b);
    for (std::size_t g = 0; g < kBins; ++g) window_hist[g] += h[g];
  };
  auto remove_column = [&](std::ptrdiff_t b) {
    const std::uint32_t* h = column(b);
    for (std::size_t g = 0; g < kBins; ++g) window_hist[g] -= h[g];
  };

  for (std::ptrdiff_t a = 0; a < std::min(u, lines); ++a) {
    for (std::ptrdiff_t b = 0; b < columns; ++b) ++column(b)[frame.at(a, b)];
  }
  for (std::ptrdiff_t i = 0; i < lines; ++i) {
    if (i + u < lines) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) ++column(b)[frame.at(i + u, b)];
    }
    if (i - o >= 0) {
      for (std::ptrdiff_t b = 0; b < columns; ++b) --column(b)[frame.at(i - o, b)];
    }

    const std::size_t band = clamped_extent(i, o, u, lines);
    std::fill(window_hist.begin(), window_hist.end(), 0u);
    for (std::ptrdiff_t b = 0; b < std::min(r, columns); ++b) add_column(b);
    for (std::ptrdiff_t j = 0; j < columns; ++j) {
      if (j + r < columns) add_column(j + r);
      if (j - l >= 0) remove_column(j - l);
      const std::size_t n = band * clamped_extent(j, l, r, columns);
      const std::size_t rank = quantile_rank(q, n);
      std::size_t cumulative = 0;
      std::size_t level = 0;
      for (; level < kBins - 1; ++level) {
        cumulative += window_hist[level];
        if (cumulative >= rank) break;
      }
      Frame<Transposed>::emit(visit, i, j, static_cast<std::uint8_t>(level));
    }
  }
}

}  // namespace detail

/// Visits every pixel once, in sweep order, as visit(i, j, n, mean, variance)
/// where n is the in-bounds pixel count of the window. Pass `peaks` to record
/// the largest accumulator values seen.
template <class Visit>
void sweep_mean_variance(const GrayImage& image, const WindowSpec& spec, Visit&& visit,
                         const SweepOptions& options = {}, AccumulatorPeaks* peaks = nullptr) {
  check_sweep_window(spec, options);
  const bool transposed =
      choose_sweep_axis(image.height(), image.width(), options.axis) == SweepAxis::column_major;
  const bool compact = options.max_window_side <= kCompactMaxWindowSide;
  if (compact) {
    if (transposed) {
      detail::sweep_moments_tracked<detail::CompactLayout, true>(image, spec, visit, peaks);
    } else {
      detail::sweep_moments_tracked<detail::CompactLayout, false>(image, spec, visit, peaks);
    }
  } else {
    if (transposed) {
      detail::sweep_moments_tracked<detail::WideLayout, true>(image, spec, visit, peaks);
    } else {
      detail::sweep_moments_tracked<detail::WideLayout, false>(image, spec, visit, peaks);
    }
  }
}

/// Visits every pixel once as visit(i, j, min, max) over its clamped window.
template <class Visit>
void sweep_extrema(const GrayImage& image, const WindowSpec& spec, Visit&& visit,
                   std::optional<SweepAxis> axis = std::nullopt) {
  if (choose_sweep_axis(image.height(), image.width(), axis) == SweepAxis::column_major) {
    detail::sweep_extrema<true>(image, spec, visit);
  } else {
    detail::sweep_extrema<false>(image, spec, visit);
  }
}

/// Visits every pixel once as visit(i, j, level), where level is the smallest
/// gray level whose cumulative window count reaches quantile_rank(q, n).
/// Throws std::invalid_argument unless 0 < q <= 1.
template <class Visit>
void sweep_quantile(const GrayImage& image, const WindowSpec& spec, double q, Visit&& visit,
                    std::optional<SweepAxis> axis = std::nullopt) {
  if (!(q > 0.0 && q <= 1.0)) {
    throw std::invalid_argument("quantile rank fraction must lie in (0, 1]");
  }
  if (choose_sweep_axis(image.height(), image.width(), axis) == SweepAxis::column_major) {
    detail::sweep_quantile<true>(image, spec, q, visit);
  } else {
    detail::sweep_quantile<false>(image, spec, q, visit);
  }
}

}  // namespace slidebin
