#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rschur/cscs.hpp"
#include "rschur/problems.hpp"

namespace rschur {

struct BenchCell {
  ProblemSpec problem;
  double theta = 1.0;
  Backend backend = Backend::dct_dst;
};

/// Every (problem, theta, backend) combination, problems outermost.
std::vector<BenchCell> expand_cells(std::span<const ProblemSpec> problems,
                                    std::span<const double> thetas,
                                    std::span<const Backend> backends);

struct BenchOptions {
  double tol = 1e-7;
  std::size_t max_iters = 500;
  bool compute_rho = true;
  std::size_t rho_limit = kDenseRadiusLimit;
  unsigned jobs = 1;
};

struct BenchRow {
  Example example = Example::ex1;
  std::size_t n = 0;
  double p = 0.0;
  double theta = 0.0;
  Backend backend = Backend::dct_dst;
  // Empty for a failed cell.
  std::optional<std::size_t> iterations;
  std::optional<double> rel_residual;
  std::optional<double> rho;
  double elapsed_ms = 0.0;

  // Not part of the CSV report.
  bool converged = false;
  std::string error;

  bool failed() const noexcept { return !iterations.has_value(); }
};

/// Solves each cell with b = ones and a zero initial guess. Rows come back in
/// cell order whatever opts.jobs is; an exception inside one cell marks that
/// row failed and the campaign carries on.
std::vector<BenchRow> run_bench(std::span<const BenchCell> cells, const BenchOptions& opts);
BenchRow run_cell(const BenchCell& cell, const BenchOptions& opts);

inline constexpr const char* kCsvHeader =
    "example,n,p,theta,backend,iterations,rel_residual,rho,elapsed_ms";

std::string to_csv(std::span<const BenchRow> rows);
/// Inverse of to_csv (converged/error are not stored). Throws ParseError.
std::vector<BenchRow> parse_csv(const std::string& text);
std::string to_markdown(std::span<const BenchRow> rows);

}  // namespace rschur
