#pragma once

#include <string>
#include <string_view>

namespace polarfreq {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_double(double value);

/// Strict full-string parse; throws ParseError carrying `line`.
double parse_double(std::string_view text, std::size_t line);
long long parse_integer(std::string_view text, std::size_t line);

}  // namespace polarfreq
