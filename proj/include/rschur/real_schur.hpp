#pragma once

// Real Schur factorizations of real circulant and skew-circulant matrices,
//
//   C = U Omega U^T,    S = V Sigma V^T,
//
// applied without ever forming U or V: U = Q^T B and V = Q B~, where Q is an
// O(n) butterfly and B, B~ are block-diagonal pairs of one DCT and one
// index-reversed DST of about n/2 points each:
//
//            circulant side (B)             skew side (B~)
//   n = 2m   DCT-I_{m+1} (+) J DST-I_{m-1} J   DCT-II_m (+) J DST-II_m J
//   n = 2m+1 DCT-V_{m+1} (+) J DST-V_m J       DCT-VI_{m+1} (+) J DST-VI_m J
//
// Omega and Sigma are "X-pattern" matrices: a diagonal plus one coupling per
// mirrored index pair, each pair forming a 2x2 block [[a, b], [-b, a]] whose
// eigenvalues a +- ib are eigenvalues of the original matrix.

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

#include "rschur/trig_transforms.hpp"

namespace rschur {

using Vector = std::vector<double>;

enum class SchurSide { circulant, skew };
enum class Parity { even, odd };

/// Cross-shaped real Schur core. With partner(j) = (n-j) mod n (circulant)
/// or n-1-j (skew), the represented matrix has M[j][j] = diag[j] and
/// M[j][partner(j)] = anti[j]; diag is symmetric and anti antisymmetric under
/// the pairing, and anti vanishes at fixed points.
class XPattern {
 public:
  /// Throws DimensionError on length mismatch and std::invalid_argument when
  /// the pairing symmetries do not hold exactly.
  XPattern(SchurSide pairing, Vector diag, Vector anti);

  std::size_t n() const noexcept { return diag_.size(); }
  SchurSide pairing() const noexcept { return pairing_; }
  std::span<const double> diag() const noexcept { return diag_; }
  std::span<const double> anti() const noexcept { return anti_; }

  std::size_t partner(std::size_t j) const noexcept {
    const std::size_t n = diag_.size();
    return pairing_ == SchurSide::circulant ? (n - j) % n : n - 1 - j;
  }

  Eigen::MatrixXd dense() const;

 private:
  SchurSide pairing_;
  Vector diag_;
  Vector anti_;
};

/// Compressed eigenvalue data lambda_k = alpha_k + i beta_k in the canonical
/// ordering. Lengths (n = 2m or 2m+1):
///   circulant even: alphas a_0..a_m,        betas b_1..b_{m-1}
///   circulant odd:  alphas a_0..a_m,        betas b_1..b_m
///   skew even:      alphas a_0..a_{m-1},    betas b_0..b_{m-1}
///   skew odd:       alphas a_0..a_m,        betas b_0..b_{m-1}
/// Betas of real eigenvalues (a_0, and a_m where it is real) are implied zero.
struct SpectralPair {
  std::size_t n = 0;
  SchurSide kind = SchurSide::circulant;
  Parity parity = Parity::even;
  Vector alphas;
  Vector betas;

  XPattern expand() const;
};

/// The butterfly Q (transposed: Q^T), pairing entries j and n-j. O(n).
Vector apply_q(std::span<const double> x, bool transposed = false);

/// Block-diagonal DCT / reversed-DST pair for one side and size; plans are
/// built once. Empty sine blocks (n <= 2 on the circulant side) are skipped.
class BlockTransform {
 public:
  BlockTransform(SchurSide side, std::size_t n, DttBackend backend = DttBackend::fast);

  std::size_t n() const noexcept { return n_; }
  SchurSide side() const noexcept { return side_; }
  std::size_t head_size() const noexcept { return cosine_.size(); }
  std::size_t tail_size() const noexcept { return n_ - cosine_.size(); }

  Vector apply(std::span<const double> x, bool transposed = false) const;

 private:
  SchurSide side_;
  std::size_t n_;
  DttPlan cosine_;
  std::vector<DttPlan> sine_;  // zero or one plan
};

Vector apply_block_transform(SchurSide side, std::span<const double> x, bool transposed = false);

/// Omega (circulant) or Sigma (skew) from the matrix's first column using
/// one block transform. Throws DimensionError on empty input.
SpectralPair real_spectrum(SchurSide kind, std::span<const double> col);

/// As above, reusing an existing transform of matching side and size.
SpectralPair real_spectrum(const BlockTransform& transform, std::span<const double> col);

enum class ShiftSign { plus, minus, none };

/// (theta I + X) y, (theta I - X) y, or X y. O(n).
Vector xpattern_apply(const XPattern& x, double shift, ShiftSign sign, std::span<const double> y);

/// Pivots at or below this fraction of |theta| + |a_j| + |b_j| count as zero.
inline constexpr double kSingularPivot = 1e-13;

/// Solves (theta I + X) y = z pairwise in O(n). Throws SingularShiftError
/// naming the first index whose scalar or 2x2 pivot vanishes.
Vector xpattern_shifted_solve(const XPattern& x, double theta, std::span<const double> z);

}  // namespace rschur
