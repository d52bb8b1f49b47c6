#include "slidebin/window.hpp"

#include <charconv>
#include <stdexcept>

namespace slidebin {

WindowSpec::WindowSpec(std::size_t height, std::size_t width) : h_(height), w_(width) {
  if (h_ == 0 || w_ == 0) {
    throw std::invalid_argument("window sides must be at least 1");
  }
}

std::string WindowSpec::to_string() const {
  return std::to_string(h_) + "x" + std::to_string(w_);
}

namespace {

std::size_t parse_side(std::string_view text, const std::string& whole) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || value == 0) {
    throw std::invalid_argument("invalid window '" + whole + "'");
  }
  return value;
}

}  // namespace

WindowSpec parse_window(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) {
    const auto side = parse_side(text, text);
    return WindowSpec(side, side);
  }
  const std::string_view view(text);
  return WindowSpec(parse_side(view.substr(0, x), text), parse_side(view.substr(x + 1), text));
}

}  // namespace slidebin
