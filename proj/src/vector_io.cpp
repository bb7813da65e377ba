#include "rschur/vector_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "rschur/errors.hpp"

namespace rschur {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_real(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return value;
}

void write_vector(std::ostream& out, std::span<const double> v) {
  char buf[32];
  out << v.size() << '\n';
  for (double x : v) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out << buf << '\n';
  }
}

void write_vector(const std::filesystem::path& path, std::span<const double> v) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_vector(out, v);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Vector read_vector(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw ParseError(0, "empty vector file");
  ++lineno;

  const std::string head = trim(line);
  std::size_t n = 0;
  const auto res = std::from_chars(head.data(), head.data() + head.size(), n);
  if (head.empty() || res.ec != std::errc() || res.ptr != head.data() + head.size()) {
    throw ParseError(lineno, "line 1: expected a vector length, got '" + line + "'");
  }

  Vector v;
  v.reserve(n);
  while (v.size() < n) {
    if (!std::getline(in, line)) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": file ends after " +
                                   std::to_string(v.size()) + " of " + std::to_string(n) +
                                   " entries");
    }
    ++lineno;
    try {
      v.push_back(parse_real(line));
    } catch (const std::invalid_argument&) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": expected a number, got '" +
                                   line + "'");
    }
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!trim(line).empty()) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": more than " +
                                   std::to_string(n) + " entries");
    }
  }
  return v;
}

Vector read_vector(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_vector(in);
}

}  // namespace rschur
