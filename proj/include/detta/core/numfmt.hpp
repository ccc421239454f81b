#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace detta {

/// Fixed-point text form with six decimals, locale independent.
std::string format_fixed6(double value);

/// Rounds a value to what survives a format_fixed6 / parse round trip.
double quantize6(double value);

/// Angle quantized to six decimals and kept in (-180, 180].
double quantize_angle6(double degrees);

/// Parses a complete token as a finite double; returns false on any junk.
bool parse_double(std::string_view token, double& out);
bool parse_int(std::string_view token, std::int64_t& out);
bool parse_uint(std::string_view token, std::uint64_t& out);

}  // namespace detta
