#include "rschur/real_schur.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rschur/errors.hpp"

namespace rschur {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

std::size_t cosine_block_size(SchurSide side, std::size_t n) {
  const std::size_t m = n / 2;
  if (side == SchurSide::circulant) return m + 1;
  return n % 2 == 0 ? m : m + 1;
}

DttKind cosine_kind(SchurSide side, std::size_t n) {
  const bool even = n % 2 == 0;
  if (side == SchurSide::circulant) return even ? kDctI : kDctV;
  return even ? kDctII : kDctVI;
}

DttKind sine_kind(SchurSide side, std::size_t n) {
  const bool even = n % 2 == 0;
  if (side == SchurSide::circulant) return even ? kDstI : kDstV;
  return even ? kDstII : kDstVI;
}

DttPlan make_cosine_plan(SchurSide side, std::size_t n, DttBackend backend) {
  if (n == 0) throw DimensionError("BlockTransform: size must be positive");
  return DttPlan(cosine_kind(side, n), cosine_block_size(side, n), backend);
}

}  // namespace

XPattern::XPattern(SchurSide pairing, Vector diag, Vector anti)
    : pairing_(pairing), diag_(std::move(diag)), anti_(std::move(anti)) {
  if (diag_.empty()) throw DimensionError("XPattern: empty");
  detail::require_length(anti_.size(), diag_.size(), "XPattern anti");
  for (std::size_t j = 0; j < diag_.size(); ++j) {
    const std::size_t p = partner(j);
    if (diag_[p] != diag_[j] || anti_[p] != -anti_[j] || (p == j && anti_[j] != 0.0)) {
      throw std::invalid_argument("XPattern: pairing symmetry violated at index " +
                                  std::to_string(j));
    }
  }
}

Eigen::MatrixXd XPattern::dense() const {
  const auto n = static_cast<Eigen::Index>(diag_.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t j = 0; j < diag_.size(); ++j) {
    const auto r = static_cast<Eigen::Index>(j);
    m(r, r) = diag_[j];
    const std::size_t p = partner(j);
    if (p != j) m(r, static_cast<Eigen::Index>(p)) = anti_[j];
  }
  return m;
}

XPattern SpectralPair::expand() const {
  const std::size_t m = n / 2;
  Vector a(n, 0.0), b(n, 0.0);
  if (kind == SchurSide::circulant) {
    const std::size_t pairs = parity == Parity::even ? m - 1 : m;
    detail::require_length(alphas.size(), m + 1, "SpectralPair alphas");
    detail::require_length(betas.size(), pairs, "SpectralPair betas");
    a[0] = alphas[0];
    for (std::size_t k = 1; k <= pairs; ++k) {
      a[k] = a[n - k] = alphas[k];
      b[k] = betas[k - 1];
      b[n - k] = -betas[k - 1];
    }
    if (parity == Parity::even) a[m] = alphas[m];
  } else {
    detail::require_length(alphas.size(), parity == Parity::even ? m : m + 1, "SpectralPair alphas");
    detail::require_length(betas.size(), m, "SpectralPair betas");
    for (std::size_t k = 0; k < m; ++k) {
      a[k] = a[n - 1 - k] = alphas[k];
      b[k] = betas[k];
      b[n - 1 - k] = -betas[k];
    }
    if (parity == Parity::odd) a[m] = alphas[m];
  }
  return XPattern(kind, std::move(a), std::move(b));
}

Vector apply_q(std::span<const double> x, bool transposed) {
  const std::size_t n = x.size();
  if (n == 0) throw DimensionError("apply_q: empty vector");
  Vector y(x.begin(), x.end());
  // Pairs (j, n-j) for 1 <= j < n/2 rotate by 45 degrees; 0 and (even n) n/2
  // are fixed.
  for (std::size_t j = 1; 2 * j < n; ++j) {
    const double lo = x[j];
    const double hi = x[n - j];
    if (!transposed) {
      y[j] = (lo + hi) * kInvSqrt2;
      y[n - j] = (hi - lo) * kInvSqrt2;
    } else {
      y[j] = (lo - hi) * kInvSqrt2;
      y[n - j] = (lo + hi) * kInvSqrt2;
    }
  }
  return y;
}

BlockTransform::BlockTransform(SchurSide side, std::size_t n, DttBackend backend)
    : side_(side), n_(n), cosine_(make_cosine_plan(side, n, backend)) {
  if (const std::size_t tail = n - cosine_.size(); tail > 0) {
    sine_.emplace_back(sine_kind(side, n), tail, backend);
  }
}

Vector BlockTransform::apply(std::span<const double> x, bool transposed) const {
  detail::require_length(x.size(), n_, "BlockTransform::apply");
  const std::size_t head = cosine_.size();
  Vector y = cosine_.apply(x.first(head), transposed);
  y.resize(n_);
  if (!sine_.empty()) {
    Vector tail(x.rbegin(), x.rend() - static_cast<std::ptrdiff_t>(head));
    const Vector out = sine_.front().apply(tail, transposed);
    std::reverse_copy(out.begin(), out.end(), y.begin() + static_cast<std::ptrdiff_t>(head));
  }
  return y;
}

Vector apply_block_transform(SchurSide side, std::span<const double> x, bool transposed) {
  if (x.empty()) throw DimensionError("apply_block_transform: empty vector");
  return BlockTransform(side, x.size()).apply(x, transposed);
}

SpectralPair real_spectrum(SchurSide kind, std::span<const double> col) {
  if (col.empty()) throw DimensionError("real_spectrum: empty first column");
  return real_spectrum(BlockTransform(kind, col.size()), col);
}

SpectralPair real_spectrum(const BlockTransform& transform, std::span<const double> col) {
  const std::size_t n = transform.n();
  detail::require_length(col.size(), n, "real_spectrum");
  const std::size_t m = n / 2;
  const double root_n = std::sqrt(static_cast<double>(n));
  const double root_half_n = std::sqrt(static_cast<double>(n) / 2.0);

  SpectralPair out;
  out.n = n;
  out.kind = transform.side();
  out.parity = n % 2 == 0 ? Parity::even : Parity::odd;

  if (transform.side() == SchurSide::circulant) {
    // (QU)^T Q c = U^T c = Omega U^T e_0, whose entries are scaled alphas
    // followed by reversed, negated, scaled betas.
    const Vector v = transform.apply(apply_q(col), true);
    const std::size_t pairs = out.parity == Parity::even ? m - 1 : m;
    out.alphas.resize(m + 1);
    out.alphas[0] = root_n * v[0];
    for (std::size_t k = 1; k <= pairs; ++k) out.alphas[k] = root_half_n * v[k];
    if (out.parity == Parity::even) out.alphas[m] = root_n * v[m];
    out.betas.resize(pairs);
    for (std::size_t k = 1; k <= pairs; ++k) out.betas[k - 1] = -root_half_n * v[n - k];
  } else {
    const Vector u = transform.apply(apply_q(col, true), true);
    out.alphas.resize(out.parity == Parity::even ? m : m + 1);
    for (std::size_t k = 0; k < m; ++k) out.alphas[k] = root_half_n * u[k];
    if (out.parity == Parity::odd) out.alphas[m] = root_n * u[m];
    out.betas.resize(m);
    for (std::size_t k = 0; k < m; ++k) out.betas[k] = -root_half_n * u[n - 1 - k];
  }
  return out;
}

Vector xpattern_apply(const XPattern& x, double shift, ShiftSign sign, std::span<const double> y) {
  detail::require_length(y.size(), x.n(), "xpattern_apply");
  const auto a = x.diag();
  const auto b = x.anti();
  Vector z(x.n());
  for (std::size_t j = 0; j < x.n(); ++j) {
    const double coupled = b[j] * y[x.partner(j)];
    switch (sign) {
      case ShiftSign::plus: z[j] = (shift + a[j]) * y[j] + coupled; break;
      case ShiftSign::minus: z[j] = (shift - a[j]) * y[j] - coupled; break;
      case ShiftSign::none: z[j] = a[j] * y[j] + coupled; break;
    }
  }
  return z;
}

Vector xpattern_shifted_solve(const XPattern& x, double theta, std::span<const double> z) {
  detail::require_length(z.size(), x.n(), "xpattern_shifted_solve");
  const auto a = x.diag();
  const auto b = x.anti();
  Vector y(x.n());
  for (std::size_t j = 0; j < x.n(); ++j) {
    const std::size_t p = x.partner(j);
    if (p < j) continue;
    const double d = theta + a[j];
    const double scale = std::abs(theta) + std::abs(a[j]) + std::abs(b[j]);
    if (p == j) {
      if (std::abs(d) <= kSingularPivot * scale) {
        throw SingularShiftError(j, "singular shifted core at fixed point " + std::to_string(j));
      }
      y[j] = z[j] / d;
      continue;
    }
    // [[d, b_j], [-b_j, d]] [y_j, y_p] = [z_j, z_p]
    const double det = d * d + b[j] * b[j];
    if (std::sqrt(det) <= kSingularPivot * scale) {
      throw SingularShiftError(j, "singular shifted core at pair (" + std::to_string(j) + ", " +
                                      std::to_string(p) + ")");
    }
    y[j] = (d * z[j] - b[j] * z[p]) / det;
    y[p] = (d * z[p] + b[j] * z[j]) / det;
  }
  return y;
}

}  // namespace rschur
