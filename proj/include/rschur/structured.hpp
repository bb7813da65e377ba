#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rschur {

using Vector = std::vector<double>;

/// Real n x n Toeplitz matrix T[j][k] = t_{j-k}, stored as the 2n-1
/// coefficients t_{-(n-1)}, ..., t_{n-1} in ascending order.
class ToeplitzBands {
 public:
  /// Throws DimensionError unless coeffs has odd length.
  explicit ToeplitzBands(Vector coeffs);

  std::size_t n() const noexcept { return n_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  /// t_k for -(n-1) <= k <= n-1.
  double t(std::ptrdiff_t k) const noexcept {
    return coeffs_[static_cast<std::size_t>(k + static_cast<std::ptrdiff_t>(n_) - 1)];
  }

  /// (t_0, t_1, ..., t_{n-1}).
  std::span<const double> first_column() const noexcept {
    return std::span<const double>(coeffs_).subspan(n_ - 1);
  }

 private:
  std::size_t n_;
  Vector coeffs_;
};

/// Circulant matrix C[j][k] = col[(j-k) mod n].
class CirculantCol {
 public:
  explicit CirculantCol(Vector col);
  std::size_t n() const noexcept { return col_.size(); }
  std::span<const double> col() const noexcept { return col_; }

 private:
  Vector col_;
};

/// Skew-circulant matrix: S[j][k] = col[j-k] for j >= k, -col[j-k+n] otherwise.
class SkewCirculantCol {
 public:
  explicit SkewCirculantCol(Vector col);
  std::size_t n() const noexcept { return col_.size(); }
  std::span<const double> col() const noexcept { return col_; }

 private:
  Vector col_;
};

ToeplitzBands toeplitz_from_bands(std::span<const double> coeffs);

/// T = C + S with C circulant, S skew-circulant, each carrying t_0/2 on the
/// diagonal: c_l = (t_l + t_{l-n})/2, s_l = (t_l - t_{l-n})/2 for l >= 1.
std::pair<CirculantCol, SkewCirculantCol> cscs_split(const ToeplitzBands& t);

Eigen::MatrixXd dense_of(const ToeplitzBands& t);
Eigen::MatrixXd dense_of(const CirculantCol& c);
Eigen::MatrixXd dense_of(const SkewCirculantCol& s);

/// O(n^2) products straight from the defining index patterns.
Vector naive_matvec(const ToeplitzBands& t, std::span<const double> x);
Vector naive_matvec(const CirculantCol& c, std::span<const double> x);
Vector naive_matvec(const SkewCirculantCol& s, std::span<const double> x);

}  // namespace rschur
