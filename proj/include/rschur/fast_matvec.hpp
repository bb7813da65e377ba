#pragma once

#include <span>

#include "rschur/real_schur.hpp"
#include "rschur/structured.hpp"

namespace rschur {

/// A circulant (or skew-circulant) matrix held as its real Schur core plus
/// the block transform needed to apply U or V. Construction costs one block
/// transform; each product costs two more plus O(n).
class CirculantOperator {
 public:
  explicit CirculantOperator(const CirculantCol& c, DttBackend backend = DttBackend::fast);
  explicit CirculantOperator(const SkewCirculantCol& s, DttBackend backend = DttBackend::fast);

  std::size_t n() const noexcept { return transform_.n(); }
  SchurSide kind() const noexcept { return transform_.side(); }
  const SpectralPair& spectrum() const noexcept { return spectrum_; }
  const XPattern& core() const noexcept { return core_; }
  const BlockTransform& transform() const noexcept { return transform_; }

  /// U^T x (circulant) or V^T x (skew): coordinates in the real Schur basis.
  Vector to_schur_basis(std::span<const double> x) const;
  /// U y or V y.
  Vector from_schur_basis(std::span<const double> y) const;

  Vector apply(std::span<const double> x) const;

 private:
  BlockTransform transform_;
  SpectralPair spectrum_;
  XPattern core_;
};

Vector circulant_matvec(const CirculantOperator& op, std::span<const double> x);
Vector skew_circulant_matvec(const CirculantOperator& op, std::span<const double> x);

/// T = C + S with both parts held as CirculantOperators.
class ToeplitzOperator {
 public:
  explicit ToeplitzOperator(const ToeplitzBands& t, DttBackend backend = DttBackend::fast);

  std::size_t n() const noexcept { return circulant_.n(); }
  const CirculantOperator& circulant_part() const noexcept { return circulant_; }
  const CirculantOperator& skew_part() const noexcept { return skew_; }

  Vector apply(std::span<const double> x) const;

 private:
  ToeplitzOperator(std::pair<CirculantCol, SkewCirculantCol> parts, DttBackend backend);

  CirculantOperator circulant_;
  CirculantOperator skew_;
};

Vector toeplitz_matvec(const ToeplitzOperator& op, std::span<const double> x);

}  // namespace rschur
