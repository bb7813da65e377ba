#include "rschur/problems.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace rschur {
namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};
constexpr double kImagTolerance = 1e-10;

double alternating(std::ptrdiff_t k) { return k % 2 == 0 ? 1.0 : -1.0; }

// Coefficients of x and x^2 on [-pi, pi].
Complex coeff_x(std::ptrdiff_t k) {
  if (k == 0) return 0.0;
  return kI * alternating(k) / static_cast<double>(k);
}

Complex coeff_x2(std::ptrdiff_t k) {
  if (k == 0) return std::numbers::pi * std::numbers::pi / 3.0;
  const auto kk = static_cast<double>(k);
  return 2.0 * alternating(k) / (kk * kk);
}

// cos(jx) and sin(jx) contribute only at k = +-j.
Complex coeff_cos(std::ptrdiff_t k, std::ptrdiff_t j) { return std::abs(k) == j ? 0.5 : 0.0; }

Complex coeff_sin(std::ptrdiff_t k, std::ptrdiff_t j) {
  if (k == j) return -0.5 * kI;
  if (k == -j) return 0.5 * kI;
  return 0.0;
}

}  // namespace

std::string to_string(Example example) {
  switch (example) {
    case Example::ex1: return "ex1";
    case Example::ex2: return "ex2";
    case Example::ex3: return "ex3";
  }
  return "?";
}

Example example_from_string(const std::string& name) {
  if (name == "ex1") return Example::ex1;
  if (name == "ex2") return Example::ex2;
  if (name == "ex3") return Example::ex3;
  throw std::invalid_argument("unknown example '" + name + "' (expected ex1, ex2 or ex3)");
}

void ProblemSpec::validate() const {
  if (n == 0) throw std::invalid_argument("problem size n must be positive");
  if (example == Example::ex1 && !(p > 0.0)) {
    throw std::invalid_argument("ex1 needs a positive exponent p");
  }
}

Complex generating_function(Example example, double x) {
  switch (example) {
    case Example::ex2: return 5.0 + x * x + 2.0 * std::cos(3.0 * x) + kI * (x + std::sin(x));
    case Example::ex3: return 10.0 + 8.0 * std::cos(x) + 2.0 * kI * std::sin(5.0 * x);
    case Example::ex1: break;
  }
  throw std::invalid_argument("ex1 is defined by its coefficients, not a symbol");
}

Complex symbol_coefficient(Example example, std::ptrdiff_t k) {
  const Complex delta0 = k == 0 ? 1.0 : 0.0;
  switch (example) {
    case Example::ex2:
      return 5.0 * delta0 + coeff_x2(k) + 2.0 * coeff_cos(k, 3) + kI * (coeff_x(k) + coeff_sin(k, 1));
    case Example::ex3:
      return 10.0 * delta0 + 8.0 * coeff_cos(k, 1) + 2.0 * kI * coeff_sin(k, 5);
    case Example::ex1: break;
  }
  throw std::invalid_argument("ex1 is defined by its coefficients, not a symbol");
}

ToeplitzBands gen_coeffs(const ProblemSpec& spec) {
  spec.validate();
  const auto n = static_cast<std::ptrdiff_t>(spec.n);
  Vector coeffs;
  coeffs.reserve(2 * spec.n - 1);
  for (std::ptrdiff_t k = -(n - 1); k <= n - 1; ++k) {
    if (spec.example == Example::ex1) {
      coeffs.push_back(std::pow(1.0 + static_cast<double>(std::abs(k)), -spec.p));
      continue;
    }
    const Complex t = symbol_coefficient(spec.example, k);
    if (std::abs(t.imag()) > kImagTolerance) {
      throw std::domain_error("coefficient t_" + std::to_string(k) + " of " +
                              to_string(spec.example) + " is not real");
    }
    coeffs.push_back(t.real());
  }
  return ToeplitzBands(std::move(coeffs));
}

}  // namespace rschur
