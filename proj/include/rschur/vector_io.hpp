#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rschur/structured.hpp"

namespace rschur {

// Plain-text vector files: the length on the first line, then one value per
// line written with 17 significant digits so that reading back is exact.

void write_vector(std::ostream& out, std::span<const double> v);
void write_vector(const std::filesystem::path& path, std::span<const double> v);

/// Throws ParseError carrying the 1-based line of the problem. A file that
/// ends early is reported at its last line.
Vector read_vector(std::istream& in);
Vector read_vector(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_real(double x);
/// Parses a whole field as a double; throws std::invalid_argument otherwise.
double parse_real(const std::string& text);

}  // namespace rschur
