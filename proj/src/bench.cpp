#include "rschur/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>
#include <type_traits>

#include "rschur/errors.hpp"
#include "rschur/vector_io.hpp"

namespace rschur {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

template <class T>
std::string optional_field(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_same_v<T, double>) {
    return format_real(*v);
  } else {
    return std::to_string(*v);
  }
}

std::size_t parse_count(const std::string& text, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ParseError(line, "line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
  }
  return value;
}

double parse_field(const std::string& text, std::size_t line, const char* what) {
  try {
    return parse_real(text);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "line " + std::to_string(line) + ": bad " + what + " '" + text + "'");
  }
}

}  // namespace

std::vector<BenchCell> expand_cells(std::span<const ProblemSpec> problems,
                                    std::span<const double> thetas,
                                    std::span<const Backend> backends) {
  std::vector<BenchCell> cells;
  for (const auto& problem : problems) {
    for (double theta : thetas) {
      for (Backend backend : backends) cells.push_back({problem, theta, backend});
    }
  }
  return cells;
}

BenchRow run_cell(const BenchCell& cell, const BenchOptions& opts) {
  BenchRow row;
  row.example = cell.problem.example;
  row.n = cell.problem.n;
  row.p = cell.problem.p;
  row.theta = cell.theta;
  row.backend = cell.backend;

  const auto start = std::chrono::steady_clock::now();
  try {
    const ToeplitzBands t = gen_coeffs(cell.problem);
    SolverConfig cfg;
    cfg.theta = cell.theta;
    cfg.tol = opts.tol;
    cfg.max_iters = opts.max_iters;
    cfg.backend = cell.backend;
    const Vector b(t.n(), 1.0);
    const SolveReport report = cscs_solve(t, b, cfg);
    row.iterations = report.iterations;
    row.rel_residual = report.residuals.back();
    row.converged = report.converged;
    if (opts.compute_rho && t.n() <= opts.rho_limit) row.rho = iteration_matrix_rho(t, cell.theta);
  } catch (const std::exception& e) {
    row.iterations.reset();
    row.rel_residual.reset();
    row.rho.reset();
    row.converged = false;
    row.error = e.what();
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  row.elapsed_ms = elapsed.count();
  return row;
}

std::vector<BenchRow> run_bench(std::span<const BenchCell> cells, const BenchOptions& opts) {
  std::vector<BenchRow> rows(cells.size());
  const auto jobs = static_cast<unsigned>(
      std::min<std::size_t>(std::max(opts.jobs, 1u), std::max<std::size_t>(cells.size(), 1)));
  if (jobs == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) rows[i] = run_cell(cells[i], opts);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = run_cell(cells[i], opts);
  };
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  pool.clear();
  return rows;
}

std::string to_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.example) << ',' << r.n << ',' << format_real(r.p) << ','
        << format_real(r.theta) << ',' << to_string(r.backend) << ',' << optional_field(r.iterations)
        << ',' << optional_field(r.rel_residual) << ',' << optional_field(r.rho) << ','
        << format_real(r.elapsed_ms) << '\n';
  }
  return out.str();
}

std::vector<BenchRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw ParseError(1, "line 1: expected header '" + std::string(kCsvHeader) + "'");
  }
  std::vector<BenchRow> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": expected 9 fields, got " +
                                   std::to_string(f.size()));
    }
    BenchRow r;
    try {
      r.example = example_from_string(f[0]);
      r.backend = backend_from_string(f[4]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, "line " + std::to_string(lineno) + ": " + e.what());
    }
    r.n = parse_count(f[1], lineno, "n");
    r.p = parse_field(f[2], lineno, "p");
    r.theta = parse_field(f[3], lineno, "theta");
    if (!f[5].empty()) r.iterations = parse_count(f[5], lineno, "iterations");
    if (!f[6].empty()) r.rel_residual = parse_field(f[6], lineno, "rel_residual");
    if (!f[7].empty()) r.rho = parse_field(f[7], lineno, "rho");
    r.elapsed_ms = parse_field(f[8], lineno, "elapsed_ms");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_markdown(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << "| example | n | p | theta | backend | N | rel. residual | rho | ms |\n"
      << "|---|---:|---:|---:|---|---:|---:|---:|---:|\n";
  char buf[64];
  for (const auto& r : rows) {
    out << "| " << to_string(r.example) << " | " << r.n << " | ";
    if (r.example == Example::ex1) {
      std::snprintf(buf, sizeof buf, "%g", r.p);
      out << buf;
    } else {
      out << '-';
    }
    std::snprintf(buf, sizeof buf, "%.4g", r.theta);
    out << " | " << buf << " | " << to_string(r.backend) << " | ";
    if (r.failed()) {
      out << "failed | - | - | ";
    } else {
      std::snprintf(buf, sizeof buf, "%.2e", *r.rel_residual);
      out << *r.iterations << (r.converged ? "" : "*") << " | " << buf << " | ";
      if (r.rho) {
        std::snprintf(buf, sizeof buf, "%.4f", *r.rho);
        out << buf;
      } else {
        out << '-';
      }
      out << " | ";
    }
    std::snprintf(buf, sizeof buf, "%.1f", r.elapsed_ms);
    out << buf << " |\n";
  }
  return out.str();
}

}  // namespace rschur
