#include "detta/core/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "detta/core/angles.hpp"
#include "detta/core/errors.hpp"

namespace detta {

std::string format_fixed6(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("format_fixed6: non-finite value");
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::fixed, 6);
  if (ec != std::errc{}) throw InvalidArgument("format_fixed6: value out of range");
  std::string out(buf.data(), end);
  if (out == "-0.000000") out.erase(0, 1);  // tiny negatives and -0.0
  return out;
}

double quantize6(double value) {
  double out = 0.0;
  parse_double(format_fixed6(value), out);
  return out;
}

double quantize_angle6(double degrees) { return wrap_angle(quantize6(wrap_angle(degrees))); }

bool parse_double(std::string_view token, double& out) {
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (*first == '+') ++first;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) return false;
  out = v;
  return true;
}

bool parse_int(std::string_view token, std::int64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

bool parse_uint(std::string_view token, std::uint64_t& out) {
  if (token.empty()) return false;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace detta
