#pragma once

#include <complex>
#include <span>
#include <vector>

namespace rschur {

using Complex = std::complex<double>;

/// Unnormalized DFT of arbitrary length: X_k = sum_j x_j e^{-2 pi i jk/n}.
/// The inverse transform divides by n. O(n log n) for every n.
std::vector<Complex> dft(std::span<const Complex> x, bool inverse = false);

/// In-place variant; `x` is overwritten with its transform.
void dft_inplace(std::vector<Complex>& x, bool inverse = false);

}  // namespace rschur
