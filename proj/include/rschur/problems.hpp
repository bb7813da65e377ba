#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include "rschur/structured.hpp"

namespace rschur {

/// Three non-Hermitian or slowly decaying Toeplitz test families:
///   ex1: t_k = (1 + |k|)^{-p}
///   ex2: symbol f(x) = 5 + x^2 + 2 cos 3x + i (x + sin x)
///   ex3: symbol f(x) = 10 + 8 cos x + 2i sin 5x
/// Symbols map to coefficients t_k = (1/2pi) int_{-pi}^{pi} f(x) e^{-ikx} dx.
enum class Example { ex1, ex2, ex3 };

std::string to_string(Example example);
/// Throws std::invalid_argument for names other than ex1, ex2, ex3.
Example example_from_string(const std::string& name);

struct ProblemSpec {
  Example example = Example::ex1;
  std::size_t n = 0;
  double p = 1.0;  // ex1 only

  /// Throws std::invalid_argument for n = 0 or (ex1) p <= 0.
  void validate() const;
};

/// f(x) for ex2 and ex3; throws std::invalid_argument for ex1.
std::complex<double> generating_function(Example example, double x);

/// Closed-form Fourier coefficient t_k of the ex2 / ex3 symbol.
std::complex<double> symbol_coefficient(Example example, std::ptrdiff_t k);

/// Bands t_{-(n-1)}..t_{n-1}. Symbol coefficients whose imaginary part
/// exceeds 1e-10 are rejected with std::domain_error.
ToeplitzBands gen_coeffs(const ProblemSpec& spec);

}  // namespace rschur
