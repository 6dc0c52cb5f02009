#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypergen::text {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

// Strict decimal parse: digits only, no sign, no surrounding space.
std::optional<std::uint64_t> parse_uint(std::string_view s);
std::optional<double> parse_double(std::string_view s);

// Shortest representation that round-trips; identical on every platform.
std::string format_double(double v);
// Fixed number of significant digits, for human-facing tables.
std::string format_double(double v, int significant_digits);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hypergen::text
