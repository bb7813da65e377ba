#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "rschur/cscs.hpp"
#include "rschur/errors.hpp"
#include "rschur/fft.hpp"
#include "rschur/problems.hpp"

using namespace rschur;

namespace {

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

ToeplitzBands scalar_bands(std::size_t n, double t0) {
  Vector t(2 * n - 1, 0.0);
  t[n - 1] = t0;
  return ToeplitzBands(std::move(t));
}

Vector dense_solve(const ToeplitzBands& t, std::span<const double> b) {
  const Eigen::VectorXd x =
      dense_of(t).partialPivLu().solve(Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size())));
  return Vector(x.data(), x.data() + x.size());
}

}  // namespace

TEST_CASE("dft: worked cases") {
  const auto d = dft(std::vector<Complex>{1, 0, 0, 0});
  for (const auto& z : d) CHECK(std::abs(z - Complex(1.0)) < 1e-15);
  const auto o = dft(std::vector<Complex>(4, 1.0));
  CHECK(std::abs(o[0] - Complex(4.0)) < 1e-15);
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(o[k]) < 1e-15);
}

TEST_CASE("dft: matches the definitional sum at awkward lengths") {
  oracle::Gen gen(51);
  for (std::size_t n : {1, 2, 3, 7, 17, 97, 250, 1000, 1009}) {
    std::vector<Complex> x(n);
    for (auto& z : x) z = Complex(gen.uniform(), gen.uniform());
    for (bool inverse : {false, true}) {
      const auto got = dft(x, inverse);
      const auto want = oracle::dft_sum(x, inverse);
      double err = 0.0, scale = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        err = std::max(err, std::abs(got[k] - want[k]));
        scale = std::max(scale, std::abs(want[k]));
      }
      INFO("n = ", n);
      CHECK(err < 1e-10 * scale);
    }
    auto y = x;
    dft_inplace(y);
    dft_inplace(y, true);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k) err = std::max(err, std::abs(y[k] - x[k]));
    CHECK(err < 1e-13);
  }
}

TEST_CASE("SolverConfig validation") {
  SolverConfig cfg;
  cfg.theta = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.theta = 1.0;
  cfg.tol = -1e-3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.tol = 1e-7;
  cfg.max_iters = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK(backend_from_string("fft") == Backend::fft);
  CHECK(to_string(Backend::dct_dst) == "dct_dst");
  CHECK_THROWS_AS(backend_from_string("fftw"), std::invalid_argument);
}

TEST_CASE("cscs_solve: T = 2I converges in one sweep") {
  for (auto backend : {Backend::dct_dst, Backend::fft}) {
    SolverConfig cfg;
    cfg.theta = 1.0;
    cfg.backend = backend;
    const auto r = cscs_solve(scalar_bands(8, 2.0), Vector(8, 1.0), cfg);
    CHECK(r.converged);
    CHECK(r.iterations == 1);
    CHECK(oracle::max_abs_diff(r.solution, Vector(8, 0.5)) < 1e-14);
    CHECK(r.warnings.empty());
  }
}

TEST_CASE("cscs_solve: exact solution is a fixed point of one sweep") {
  oracle::Gen gen(52);
  for (std::size_t n : {1, 2, 5, 16, 63}) {
    const auto t = gen.pd_bands(n);
    const auto b = gen.vec(n);
    const auto x = dense_solve(t, b);
    const double theta = gen.uniform(0.5, 3.0);
    const ToeplitzOperator op(t);
    DctDstSweep fast(op, b, theta);
    fast.reset(x);
    FftSweep ref(t, b, theta);
    ref.reset(x);
    INFO("n = ", n);
    CHECK(oracle::max_abs_diff(fast.advance(), x) < 1e-10);
    CHECK(oracle::max_abs_diff(ref.advance(), x) < 1e-10);
  }
}

TEST_CASE("cscs_solve: both backends produce the same iterates") {
  oracle::Gen gen(53);
  for (std::size_t n : {2, 3, 10, 64, 127, 256, 511, 512}) {
    const auto t = gen.pd_bands(n);
    const auto b = gen.vec(n);
    SolverConfig cfg;
    cfg.theta = gen.uniform(0.5, 4.0);
    cfg.record_history = true;
    cfg.tol = 1e-12;
    cfg.max_iters = 40;
    const auto a = cscs_solve(t, b, cfg);
    cfg.backend = Backend::fft;
    const auto f = cscs_solve(t, b, cfg);
    INFO("n = ", n);
    REQUIRE(a.history.size() == f.history.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < a.history.size(); ++k) {
      worst = std::max(worst, oracle::max_abs_diff(a.history[k], f.history[k]));
    }
    CHECK(worst < 1e-8);
    CHECK(a.iterations == f.iterations);
  }
}

TEST_CASE("cscs_solve: converged answers pass an independent residual check") {
  oracle::Gen gen(54);
  for (std::size_t n : {7, 100, 301}) {
    const auto t = gen.pd_bands(n);
    const auto b = gen.vec(n);
    SolverConfig cfg;
    cfg.theta = t.t(0) / 2.0;
    for (auto backend : {Backend::dct_dst, Backend::fft}) {
      cfg.backend = backend;
      const auto r = cscs_solve(t, b, cfg);
      REQUIRE(r.converged);
      auto res = naive_matvec(t, r.solution);
      for (std::size_t i = 0; i < n; ++i) res[i] = b[i] - res[i];
      CHECK(norm2(res) / norm2(b) <= cfg.tol);
      CHECK(r.residuals.back() <= cfg.tol);
      CHECK(r.residuals.size() == r.iterations + 1);
    }
  }
}

TEST_CASE("cscs_solve: late residual ratios settle below rho + 0.05") {
  const auto t = gen_coeffs({Example::ex1, 200, 0.9});
  for (double theta : {1.985, 6.0}) {
    const double rho = iteration_matrix_rho(t, theta);
    REQUIRE(rho < 1.0);
    SolverConfig cfg;
    cfg.theta = theta;
    cfg.tol = 1e-12;
    const auto r = cscs_solve(t, Vector(200, 1.0), cfg);
    REQUIRE(r.converged);
    REQUIRE(r.residuals.size() > 11);
    for (std::size_t k = r.residuals.size() - 10; k < r.residuals.size(); ++k) {
      CHECK(r.residuals[k] / r.residuals[k - 1] < rho + 0.05);
    }
  }
}

TEST_CASE("cscs_solve: one sweep costs six DCTs and six DSTs of about n/2") {
  oracle::Gen gen(55);
  for (std::size_t n : {3, 4, 9, 10, 255, 256, 4000}) {
    const auto t = gen.pd_bands(n);
    const ToeplitzOperator op(t);
    DctDstSweep sweep(op, gen.vec(n), 1.5);
    sweep.reset(gen.vec(n));
    TransformTally tally;
    sweep.advance();
    INFO("n = ", n);
    CHECK(tally.count(DttFlavor::cosine) == 6);
    CHECK(tally.count(DttFlavor::sine) == 6);
    for (const auto& e : tally.events()) {
      CHECK(e.size + 1 >= n / 2);
      CHECK(e.size <= n / 2 + 1);
    }
  }
}

TEST_CASE("cscs_solve: zero initial residual") {
  SolverConfig cfg;
  cfg.theta = 1.0;
  const auto r = cscs_solve(scalar_bands(5, 3.0), Vector(5, 0.0), cfg);
  CHECK(r.converged);
  CHECK(r.iterations == 0);
  CHECK(r.solution == Vector(5, 0.0));
}

TEST_CASE("cscs_solve: initial guess and iteration cap") {
  oracle::Gen gen(56);
  const auto t = gen.pd_bands(20);
  const auto b = gen.vec(20);
  SolverConfig cfg;
  cfg.theta = 50.0;
  cfg.tol = 1e-15;
  cfg.max_iters = 3;
  const auto r = cscs_solve(t, b, cfg);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 3);
  CHECK(r.residuals.size() == 4);
  CHECK(r.residuals.front() == 1.0);

  cfg.initial_guess = dense_solve(t, b);
  cfg.max_iters = 1;
  const auto warm = cscs_solve(t, b, cfg);
  CHECK(warm.iterations == 1);
  CHECK(oracle::max_abs_diff(warm.solution, cfg.initial_guess) < 1e-10);

  cfg.initial_guess = Vector(19, 0.0);
  CHECK_THROWS_AS(cscs_solve(t, b, cfg), DimensionError);
  cfg.initial_guess.clear();
  CHECK_THROWS_AS(cscs_solve(t, Vector(21, 1.0), cfg), DimensionError);
}

TEST_CASE("cscs_solve: indefinite parts warn, singular shifts throw") {
  SolverConfig cfg;
  cfg.theta = 1.0;
  cfg.max_iters = 5;
  const auto r = cscs_solve(scalar_bands(6, -1.0), Vector(6, 1.0), cfg);
  CHECK(r.warnings.size() == 2);

  for (auto backend : {Backend::dct_dst, Backend::fft}) {
    cfg.backend = backend;
    CHECK_THROWS_AS(cscs_solve(scalar_bands(6, -2.0), Vector(6, 1.0), cfg), SingularShiftError);
  }
}

TEST_CASE("iteration_matrix_rho: scalar and guard cases") {
  CHECK(iteration_matrix_rho(scalar_bands(6, 2.0), 1.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(iteration_matrix_rho(scalar_bands(6, -2.0), 1.0), SingularShiftError);
  CHECK_THROWS_AS(iteration_matrix_rho(scalar_bands(kDenseRadiusLimit + 1, 2.0), 1.0), SizeError);
}

TEST_CASE("iteration_matrix_rho never exceeds the contraction bound") {
  oracle::Gen gen(57);
  for (std::size_t n : {4, 9, 32}) {
    const auto t = gen.pd_bands(n);
    for (double theta : {0.5, 1.0, 3.0}) {
      const auto scan = theta_scan(t, std::vector<double>{theta});
      CHECK(iteration_matrix_rho(t, theta) <= scan.bound_values[0] + 1e-12);
    }
  }
}

TEST_CASE("theta_scan: two-point spectrum") {
  const XPattern c(SchurSide::circulant, {1, 4}, {0, 0});
  const XPattern s(SchurSide::skew, {1, 4, 1}, {0, 0, 0});
  const std::vector<double> grid{0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  const auto r = theta_scan(c, s, grid);
  CHECK(r.theta_best == 2.0);
  CHECK(r.circulant_factor[3] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.bound_values[3] == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(r.bound_values.size() == grid.size());
}

TEST_CASE("theta_scan: scalar matrix and grid membership") {
  const auto r = theta_scan(scalar_bands(7, 2.0), std::vector<double>{0.25, 1.0, 3.0});
  CHECK(r.theta_best == 1.0);
  CHECK(r.bound_values[1] < 1e-15);

  oracle::Gen gen(58);
  const auto t = gen.pd_bands(30);
  std::vector<double> grid;
  for (int i = 0; i < 25; ++i) grid.push_back(gen.uniform(0.1, 10.0));
  const auto g = theta_scan(t, grid);
  CHECK(std::find(grid.begin(), grid.end(), g.theta_best) != grid.end());
  CHECK(*std::min_element(g.bound_values.begin(), g.bound_values.end()) ==
        g.bound_values[static_cast<std::size_t>(std::find(grid.begin(), grid.end(), g.theta_best) - grid.begin())]);
}

TEST_CASE("theta_scan: ties go to the smaller theta") {
  const XPattern c(SchurSide::circulant, {1}, {0});
  const auto r = theta_scan(c, c, std::vector<double>{2.0, 0.5});
  CHECK(r.bound_values[0] == r.bound_values[1]);
  CHECK(r.theta_best == 0.5);
}

TEST_CASE("theta_scan: bad grids") {
  const auto t = scalar_bands(3, 2.0);
  CHECK_THROWS_AS(theta_scan(t, std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(theta_scan(t, std::vector<double>{1.0, -1.0}), std::invalid_argument);
}
