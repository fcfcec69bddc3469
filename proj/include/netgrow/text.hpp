#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace netgrow {

// Round-trip-exact decimal rendering of a double ("%.17g").
std::string format_double(double value);

// Comma-separated table with a single header row. Throws IoError.
void write_csv(const std::filesystem::path& path, std::string_view header,
               const std::vector<std::vector<std::string>>& rows);

// Splits on a single-character delimiter; no quoting.
std::vector<std::string> split(std::string_view text, char delim);

}  // namespace netgrow
