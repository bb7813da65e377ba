#pragma once

// Circulant and skew-circulant splitting (CSCS) iteration for T x = b:
//
//   (theta I + C) x_{k+1/2} = (theta I - S) x_k       + b
//   (theta I + S) x_{k+1}   = (theta I - C) x_{k+1/2} + b
//
// with T = C + S. The dct_dst backend runs entirely in real arithmetic on
// the real Schur cores; the fft backend diagonalizes C and S with complex
// DFTs and is kept as a reference.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rschur/fast_matvec.hpp"
#include "rschur/fft.hpp"
#include "rschur/structured.hpp"

namespace rschur {

enum class Backend { dct_dst, fft };

std::string to_string(Backend backend);
/// Throws std::invalid_argument for anything but "dct_dst" or "fft".
Backend backend_from_string(const std::string& name);

struct SolverConfig {
  double theta = 1.0;
  double tol = 1e-7;
  std::size_t max_iters = 500;
  Backend backend = Backend::dct_dst;
  Vector initial_guess;  // empty means zero
  bool record_history = false;

  /// Throws std::invalid_argument unless theta > 0, tol > 0, max_iters > 0.
  void validate() const;
};

struct SolveReport {
  Vector solution;
  std::size_t iterations = 0;
  /// residuals[k] = ||b - T x_k|| / ||b - T x_0||, starting at k = 0.
  Vector residuals;
  bool converged = false;
  std::vector<std::string> warnings;
  /// x_1, x_2, ... when SolverConfig::record_history is set.
  std::vector<Vector> history;
};

/// One CSCS sweep per advance() in the real Schur bases. Keeps V^T x_k
/// between sweeps so a sweep costs exactly six DCTs and six DSTs of about
/// n/2 points. Holds a reference to `op`, which must outlive the sweep.
class DctDstSweep {
 public:
  DctDstSweep(const ToeplitzOperator& op, std::span<const double> b, double theta);

  void reset(std::span<const double> x0);
  const Vector& advance();
  const Vector& current() const noexcept { return x_; }
  const Vector& half_step() const noexcept { return x_half_; }

 private:
  const ToeplitzOperator& op_;
  Vector b_;
  double theta_;
  Vector x_, x_half_;
  Vector skew_coords_;  // V^T x_k
};

/// Same iteration with C = F Lambda F^* and S = D F Lambda~ F^* D^*.
class FftSweep {
 public:
  FftSweep(const ToeplitzBands& t, std::span<const double> b, double theta);

  void reset(std::span<const double> x0);
  const Vector& advance();
  const Vector& current() const noexcept { return x_; }
  const Vector& half_step() const noexcept { return x_half_; }

 private:
  enum class Part { circulant, skew };
  // (theta +- Lambda) applied in the eigenbasis of one part; `solve` divides
  // by theta + Lambda instead.
  Vector shifted(Part part, std::span<const double> x, double sign) const;
  Vector solve(Part part, std::span<const double> z) const;
  std::vector<Complex> to_eigenbasis(Part part, std::span<const double> x) const;
  Vector from_eigenbasis(Part part, std::vector<Complex> y) const;

  std::size_t n_;
  Vector b_;
  double theta_;
  std::vector<Complex> lambda_, lambda_skew_, modulation_;
  Vector x_, x_half_;
};

/// Runs the iteration from cfg.initial_guess until the relative residual
/// drops to cfg.tol or cfg.max_iters sweeps have run. Non-positive real
/// parts in the spectra of C or S are reported as warnings.
SolveReport cscs_solve(const ToeplitzBands& t, std::span<const double> b, const SolverConfig& cfg);

inline constexpr std::size_t kDenseRadiusLimit = 4096;

/// Spectral radius of (theta I + S)^{-1} (theta I - C) (theta I + C)^{-1} (theta I - S)
/// from a dense eigenvalue computation. Throws SizeError for n > 4096 and
/// SingularShiftError when theta I + C or theta I + S is singular.
double iteration_matrix_rho(const ToeplitzBands& t, double theta);

/// max over eigenvalues a +- ib of the core of |theta - lambda| / |theta + lambda|.
double contraction_factor(const XPattern& core, double theta);

struct ThetaScan {
  double theta_best = 0.0;
  std::vector<double> grid;
  std::vector<double> circulant_factor;
  std::vector<double> skew_factor;
  std::vector<double> bound_values;  // product of the two factors
};

/// Evaluates the product of the two contraction factors on `grid` and picks
/// the minimizer, ties going to the smallest theta. Throws
/// std::invalid_argument for an empty grid or a non-positive grid point.
ThetaScan theta_scan(const XPattern& circulant_core, const XPattern& skew_core,
                     std::span<const double> grid);
ThetaScan theta_scan(const ToeplitzBands& t, std::span<const double> grid);

}  // namespace rschur
