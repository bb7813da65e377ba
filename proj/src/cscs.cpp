#include "rschur/cscs.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rschur/errors.hpp"

namespace rschur {
namespace {

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

void add_into(Vector& y, std::span<const double> b) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += b[i];
}

void warn_if_indefinite(const SpectralPair& spectrum, const char* part,
                        std::vector<std::string>& warnings) {
  const auto lowest = std::min_element(spectrum.alphas.begin(), spectrum.alphas.end());
  if (*lowest > 0.0) return;
  std::ostringstream msg;
  msg << part << " part is not positive definite: alpha_"
      << std::distance(spectrum.alphas.begin(), lowest) << " = " << *lowest;
  warnings.push_back(msg.str());
}

}  // namespace

std::string to_string(Backend backend) {
  return backend == Backend::dct_dst ? "dct_dst" : "fft";
}

Backend backend_from_string(const std::string& name) {
  if (name == "dct_dst") return Backend::dct_dst;
  if (name == "fft") return Backend::fft;
  throw std::invalid_argument("unknown backend '" + name + "' (expected dct_dst or fft)");
}

void SolverConfig::validate() const {
  if (!(theta > 0.0)) throw std::invalid_argument("theta must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");
}

DctDstSweep::DctDstSweep(const ToeplitzOperator& op, std::span<const double> b, double theta)
    : op_(op), b_(b.begin(), b.end()), theta_(theta) {
  detail::require_length(b.size(), op.n(), "DctDstSweep rhs");
  reset(Vector(op.n(), 0.0));
}

void DctDstSweep::reset(std::span<const double> x0) {
  detail::require_length(x0.size(), op_.n(), "DctDstSweep initial guess");
  x_.assign(x0.begin(), x0.end());
  x_half_ = x_;
  skew_coords_ = op_.skew_part().to_schur_basis(x_);
}

const Vector& DctDstSweep::advance() {
  const auto& circ = op_.circulant_part();
  const auto& skew = op_.skew_part();

  // U (theta I + Omega) U^T x_{k+1/2} = V (theta I - Sigma) V^T x_k + b
  Vector rhs = skew.from_schur_basis(xpattern_apply(skew.core(), theta_, ShiftSign::minus, skew_coords_));
  add_into(rhs, b_);
  const Vector w = xpattern_shifted_solve(circ.core(), theta_, circ.to_schur_basis(rhs));
  x_half_ = circ.from_schur_basis(w);

  // V (theta I + Sigma) V^T x_{k+1} = U (theta I - Omega) U^T x_{k+1/2} + b,
  // reusing U^T x_{k+1/2} = w.
  rhs = circ.from_schur_basis(xpattern_apply(circ.core(), theta_, ShiftSign::minus, w));
  add_into(rhs, b_);
  skew_coords_ = xpattern_shifted_solve(skew.core(), theta_, skew.to_schur_basis(rhs));
  x_ = skew.from_schur_basis(skew_coords_);
  return x_;
}

FftSweep::FftSweep(const ToeplitzBands& t, std::span<const double> b, double theta)
    : n_(t.n()), b_(b.begin(), b.end()), theta_(theta) {
  detail::require_length(b.size(), n_, "FftSweep rhs");
  const auto [c, s] = cscs_split(t);
  const double n = static_cast<double>(n_);

  std::vector<Complex> col(n_), skew_col(n_);
  modulation_.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    modulation_[j] = std::polar(1.0, std::numbers::pi * static_cast<double>(j) / n);
    col[j] = c.col()[j];
    skew_col[j] = std::conj(modulation_[j]) * s.col()[j];
  }
  lambda_ = dft(col);
  lambda_skew_ = dft(skew_col);
  auto singular = [&](Complex lambda) {
    return std::abs(theta_ + lambda) <= kSingularPivot * (std::abs(theta_) + std::abs(lambda));
  };
  for (std::size_t k = 0; k < n_; ++k) {
    if (singular(lambda_[k])) {
      throw SingularShiftError(k, "theta I + C is singular at eigenvalue " + std::to_string(k));
    }
    if (singular(lambda_skew_[k])) {
      throw SingularShiftError(k, "theta I + S is singular at eigenvalue " + std::to_string(k));
    }
  }
  reset(Vector(n_, 0.0));
}

void FftSweep::reset(std::span<const double> x0) {
  detail::require_length(x0.size(), n_, "FftSweep initial guess");
  x_.assign(x0.begin(), x0.end());
  x_half_ = x_;
}

std::vector<Complex> FftSweep::to_eigenbasis(Part part, std::span<const double> x) const {
  std::vector<Complex> v(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    v[j] = part == Part::skew ? std::conj(modulation_[j]) * x[j] : Complex(x[j]);
  }
  return dft(v);
}

Vector FftSweep::from_eigenbasis(Part part, std::vector<Complex> y) const {
  const auto v = dft(y, true);
  Vector out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    out[j] = (part == Part::skew ? modulation_[j] * v[j] : v[j]).real();
  }
  return out;
}

Vector FftSweep::shifted(Part part, std::span<const double> x, double sign) const {
  const auto& lambda = part == Part::skew ? lambda_skew_ : lambda_;
  auto y = to_eigenbasis(part, x);
  for (std::size_t k = 0; k < n_; ++k) y[k] *= theta_ + sign * lambda[k];
  return from_eigenbasis(part, std::move(y));
}

Vector FftSweep::solve(Part part, std::span<const double> z) const {
  const auto& lambda = part == Part::skew ? lambda_skew_ : lambda_;
  auto y = to_eigenbasis(part, z);
  for (std::size_t k = 0; k < n_; ++k) y[k] /= theta_ + lambda[k];
  return from_eigenbasis(part, std::move(y));
}

const Vector& FftSweep::advance() {
  Vector rhs = shifted(Part::skew, x_, -1.0);
  add_into(rhs, b_);
  x_half_ = solve(Part::circulant, rhs);
  rhs = shifted(Part::circulant, x_half_, -1.0);
  add_into(rhs, b_);
  x_ = solve(Part::skew, rhs);
  return x_;
}

namespace {

template <class Sweep>
void iterate(Sweep& sweep, const ToeplitzOperator& op, std::span<const double> b, double r0,
             const SolverConfig& cfg, SolveReport& report) {
  for (std::size_t k = 1; k <= cfg.max_iters; ++k) {
    const Vector& x = sweep.advance();
    Vector r = op.apply(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = b[i] - r[i];
    const double rel = norm2(r) / r0;
    report.iterations = k;
    report.residuals.push_back(rel);
    if (cfg.record_history) report.history.push_back(x);
    if (rel <= cfg.tol) {
      report.converged = true;
      break;
    }
  }
  report.solution = sweep.current();
}

}  // namespace

SolveReport cscs_solve(const ToeplitzBands& t, std::span<const double> b, const SolverConfig& cfg) {
  cfg.validate();
  const std::size_t n = t.n();
  detail::require_length(b.size(), n, "cscs_solve rhs");
  Vector x0 = cfg.initial_guess.empty() ? Vector(n, 0.0) : cfg.initial_guess;
  detail::require_length(x0.size(), n, "cscs_solve initial guess");

  const ToeplitzOperator op(t);
  SolveReport report;
  warn_if_indefinite(op.circulant_part().spectrum(), "circulant", report.warnings);
  warn_if_indefinite(op.skew_part().spectrum(), "skew-circulant", report.warnings);

  Vector r = op.apply(x0);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - r[i];
  const double r0 = norm2(r);
  if (r0 == 0.0) {
    report.solution = std::move(x0);
    report.residuals = {0.0};
    report.converged = true;
    return report;
  }
  report.residuals = {1.0};

  if (cfg.backend == Backend::dct_dst) {
    DctDstSweep sweep(op, b, cfg.theta);
    sweep.reset(x0);
    iterate(sweep, op, b, r0, cfg, report);
  } else {
    FftSweep sweep(t, b, cfg.theta);
    sweep.reset(x0);
    iterate(sweep, op, b, r0, cfg, report);
  }
  return report;
}

}  // namespace rschur
