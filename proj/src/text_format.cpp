#include "polarfreq/text_format.hpp"

#include <charconv>
#include <cmath>

#include "polarfreq/error.hpp"

namespace polarfreq {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

double parse_double(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": invalid number '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

long long parse_integer(std::string_view text, std::size_t line) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw ParseError("line " + std::to_string(line) + ": invalid integer '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

}  // namespace polarfreq
