// cscs: command-line front end for the real Schur CSCS toolkit.
//
//   cscs solve      --example ex2 --n 256 --theta 3.595 [--out x.txt]
//   cscs spectrum   --bands-file t.txt
//   cscs radius     --example ex3 --n 256 --theta 3.585
//   cscs bench      --config campaign.json | --cell ex1:4000:0.9 --theta 1.985 ...
//   cscs theta-scan --example ex1 --n 1000 --p 1.1 --grid 0.5:4:351
//
// Exit status: 0 on success, 2 for bad arguments or input files, 3 when the
// numerics fail (singular shift, no convergence, failed bench cells).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rschur/bench.hpp"
#include "rschur/cscs.hpp"
#include "rschur/errors.hpp"
#include "rschur/fast_matvec.hpp"
#include "rschur/problems.hpp"
#include "rschur/vector_io.hpp"

namespace {

using namespace rschur;
using json = nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct ProblemArgs {
  std::string example;
  std::string bands_file;
  std::size_t n = 0;
  double p = 1.0;

  ToeplitzBands load() const {
    if (!bands_file.empty()) {
      if (!std::filesystem::is_regular_file(bands_file)) {
        throw std::invalid_argument("cannot read bands file " + bands_file);
      }
      return ToeplitzBands(read_vector(std::filesystem::path(bands_file)));
    }
    if (example.empty()) throw std::invalid_argument("give --example or --bands-file");
    return gen_coeffs(spec());
  }

  ProblemSpec spec() const {
    ProblemSpec s{example_from_string(example), n, p};
    s.validate();
    return s;
  }
};

void add_problem_options(CLI::App* cmd, ProblemArgs& args) {
  auto* ex = cmd->add_option("--example", args.example, "Test problem: ex1, ex2 or ex3");
  auto* file = cmd->add_option("--bands-file", args.bands_file,
                               "Vector file holding t_{-(n-1)}..t_{n-1}");
  ex->excludes(file);
  cmd->add_option("--n", args.n, "Matrix size")->needs(ex);
  cmd->add_option("--p", args.p, "Decay exponent for ex1")->capture_default_str();
}

void print_spectrum(const char* part, const SpectralPair& s) {
  const std::size_t m = s.n / 2;
  for (std::size_t k = 0; k < s.alphas.size(); ++k) {
    double beta = 0.0;
    if (s.kind == SchurSide::circulant && k >= 1 && k <= s.betas.size()) beta = s.betas[k - 1];
    if (s.kind == SchurSide::skew && k < m) beta = s.betas[k];
    std::cout << part << ',' << k << ',' << format_real(s.alphas[k]) << ',' << format_real(beta)
              << '\n';
  }
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string f; std::getline(in, f, ':');) parts.push_back(f);
  if (parts.size() != 3) throw std::invalid_argument("--grid expects start:stop:steps");
  const double start = parse_real(parts[0]);
  const double stop = parse_real(parts[1]);
  const long steps = std::stol(parts[2]);
  if (steps < 1) throw std::invalid_argument("--grid needs at least one step");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (long i = 0; i < steps; ++i) {
    grid[static_cast<std::size_t>(i)] =
        steps == 1 ? start : start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return grid;
}

// EXAMPLE:N[:P]
ProblemSpec parse_cell(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string f; std::getline(in, f, ':');) parts.push_back(f);
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("--cell expects EXAMPLE:N[:P], got '" + text + "'");
  }
  ProblemSpec s;
  s.example = example_from_string(parts[0]);
  s.n = static_cast<std::size_t>(std::stoul(parts[1]));
  if (parts.size() == 3) s.p = parse_real(parts[2]);
  s.validate();
  return s;
}

struct Campaign {
  std::vector<BenchCell> cells;
  BenchOptions opts;
};

Campaign campaign_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  const json cfg = json::parse(in);
  Campaign c;
  c.opts.tol = cfg.value("tol", c.opts.tol);
  c.opts.max_iters = cfg.value("max_iters", c.opts.max_iters);
  c.opts.jobs = cfg.value("jobs", c.opts.jobs);
  c.opts.compute_rho = cfg.value("rho", c.opts.compute_rho);
  for (const auto& cell : cfg.at("cells")) {
    ProblemSpec spec;
    spec.example = example_from_string(cell.at("example").get<std::string>());
    spec.n = cell.at("n").get<std::size_t>();
    spec.p = cell.value("p", spec.p);
    spec.validate();
    std::vector<Backend> backends;
    for (const auto& b : cell.value("backends", std::vector<std::string>{"dct_dst"})) {
      backends.push_back(backend_from_string(b));
    }
    const auto thetas = cell.at("thetas").get<std::vector<double>>();
    const auto more = expand_cells(std::span(&spec, 1), thetas, backends);
    c.cells.insert(c.cells.end(), more.begin(), more.end());
  }
  return c;
}

int run_solve(const ProblemArgs& problem, const SolverConfig& cfg, const std::string& out) {
  const ToeplitzBands t = problem.load();
  const Vector b(t.n(), 1.0);
  const SolveReport report = cscs_solve(t, b, cfg);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << "n " << t.n() << '\n'
            << "theta " << format_real(cfg.theta) << '\n'
            << "backend " << to_string(cfg.backend) << '\n'
            << "iterations " << report.iterations << '\n'
            << "rel_residual " << format_real(report.residuals.back()) << '\n'
            << "converged " << (report.converged ? "yes" : "no") << '\n';
  if (!out.empty()) write_vector(std::filesystem::path(out), report.solution);
  return report.converged ? 0 : kExitNumerical;
}

int run_bench_command(const Campaign& c, const std::string& out, bool markdown) {
  const auto rows = run_bench(c.cells, c.opts);
  int status = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].failed()) {
      std::cerr << "cell " << i << " failed: " << rows[i].error << '\n';
      status = kExitNumerical;
    }
  }
  const std::string report = markdown ? to_markdown(rows) : to_csv(rows);
  if (out.empty()) {
    std::cout << report;
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot open " + out + " for writing");
    f << report;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circulant and skew-circulant splitting solver for real Toeplitz systems"};
  app.require_subcommand(1);

  ProblemArgs problem;
  SolverConfig solver;
  std::string backend = "dct_dst";
  std::string out;

  auto* solve = app.add_subcommand("solve", "Solve T x = ones with the CSCS iteration");
  add_problem_options(solve, problem);
  solve->add_option("--theta", solver.theta, "Shift parameter")->required();
  solve->add_option("--tol", solver.tol, "Relative residual tolerance")->capture_default_str();
  solve->add_option("--maxit", solver.max_iters, "Iteration cap")->capture_default_str();
  solve->add_option("--backend", backend, "dct_dst or fft")->capture_default_str();
  solve->add_option("--out", out, "Write the solution vector here");

  auto* spectrum = app.add_subcommand("spectrum", "Print the eigenvalue data of C and S");
  add_problem_options(spectrum, problem);

  double theta = 1.0;
  auto* radius = app.add_subcommand("radius", "Spectral radius of the iteration matrix");
  add_problem_options(radius, problem);
  radius->add_option("--theta", theta, "Shift parameter")->required();

  std::string config;
  std::vector<std::string> cells;
  std::vector<double> thetas;
  std::vector<std::string> backends;
  BenchOptions bench_opts;
  bool no_rho = false;
  bool markdown = false;
  auto* bench = app.add_subcommand("bench", "Run a benchmark campaign and write a report");
  auto* config_opt = bench->add_option("--config", config, "JSON campaign file");
  bench->add_option("--cell", cells, "EXAMPLE:N[:P], repeatable")->excludes(config_opt);
  bench->add_option("--theta", thetas, "Shift, repeatable")->excludes(config_opt);
  bench->add_option("--backend", backends, "dct_dst or fft, repeatable")->excludes(config_opt);
  bench->add_option("--tol", bench_opts.tol)->capture_default_str();
  bench->add_option("--maxit", bench_opts.max_iters)->capture_default_str();
  bench->add_option("--jobs", bench_opts.jobs, "Cells run in parallel")->capture_default_str();
  bench->add_flag("--no-rho", no_rho, "Skip the dense spectral radius");
  bench->add_flag("--markdown", markdown, "Markdown table instead of CSV");
  bench->add_option("--out", out, "Report path (default stdout)");

  std::string grid;
  bool table = false;
  auto* scan = app.add_subcommand("theta-scan", "Minimize the contraction bound over a theta grid");
  add_problem_options(scan, problem);
  scan->add_option("--grid", grid, "start:stop:steps")->required();
  scan->add_flag("--table", table, "Print every grid point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) {
      solver.backend = backend_from_string(backend);
      solver.validate();
      return run_solve(problem, solver, out);
    }
    if (*spectrum) {
      const ToeplitzOperator op(problem.load());
      std::cout << "part,k,alpha,beta\n";
      print_spectrum("circulant", op.circulant_part().spectrum());
      print_spectrum("skew", op.skew_part().spectrum());
      return 0;
    }
    if (*radius) {
      std::cout << format_real(iteration_matrix_rho(problem.load(), theta)) << '\n';
      return 0;
    }
    if (*bench) {
      Campaign c;
      if (!config.empty()) {
        c = campaign_from_json(config);
      } else {
        if (cells.empty()) throw std::invalid_argument("bench needs --config or at least one --cell");
        std::vector<ProblemSpec> specs;
        for (const auto& cell : cells) specs.push_back(parse_cell(cell));
        std::vector<Backend> bs;
        for (const auto& b : backends) bs.push_back(backend_from_string(b));
        if (bs.empty()) bs.push_back(Backend::dct_dst);
        c.cells = expand_cells(specs, thetas, bs);
        c.opts = bench_opts;
      }
      if (no_rho) c.opts.compute_rho = false;
      return run_bench_command(c, out, markdown);
    }
    if (*scan) {
      const auto result = theta_scan(problem.load(), parse_grid(grid));
      if (table) {
        std::cout << "theta,circulant,skew,bound\n";
        for (std::size_t i = 0; i < result.grid.size(); ++i) {
          std::cout << format_real(result.grid[i]) << ',' << format_real(result.circulant_factor[i])
                    << ',' << format_real(result.skew_factor[i]) << ','
                    << format_real(result.bound_values[i]) << '\n';
        }
      }
      const auto best = std::find(result.grid.begin(), result.grid.end(), result.theta_best);
      std::cout << "theta_best " << format_real(result.theta_best) << '\n'
                << "bound " << format_real(result.bound_values[static_cast<std::size_t>(best - result.grid.begin())])
                << '\n';
      return 0;
    }
  } catch (const SingularShiftError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: config: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
