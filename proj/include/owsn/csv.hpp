#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Locale-independent numeric formatting for the CSV reports. All file
// formats use '.' decimals and '\n' line endings on every platform.

namespace owsn::csv {

// Fixed-point with the given number of decimals, rounding half away
// from zero ("1758.746" -> "1759" at 0 decimals, "14.655" -> "14.66").
std::string fixed(double value, int decimals);

// Shortest representation that round-trips through double parsing
// ("10", "1.8", "5016.540640720456").
std::string compact(double value);

// Nearest integer, half away from zero.
long long round_half_away(double value);

// Splits one CSV line on ','. Fields in this project never embed commas
// or quotes, so no quoting layer is needed.
std::vector<std::string> split_line(const std::string& line);

}  // namespace owsn::csv
