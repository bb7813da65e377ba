#include "rschur/fast_matvec.hpp"

#include <stdexcept>

#include "rschur/errors.hpp"

namespace rschur {

CirculantOperator::CirculantOperator(const CirculantCol& c, DttBackend backend)
    : transform_(SchurSide::circulant, c.n(), backend),
      spectrum_(real_spectrum(transform_, c.col())),
      core_(spectrum_.expand()) {}

CirculantOperator::CirculantOperator(const SkewCirculantCol& s, DttBackend backend)
    : transform_(SchurSide::skew, s.n(), backend),
      spectrum_(real_spectrum(transform_, s.col())),
      core_(spectrum_.expand()) {}

// U = Q^T B on the circulant side, V = Q B~ on the skew side.
Vector CirculantOperator::to_schur_basis(std::span<const double> x) const {
  detail::require_length(x.size(), n(), "CirculantOperator::to_schur_basis");
  const bool circulant = kind() == SchurSide::circulant;
  return transform_.apply(apply_q(x, !circulant), true);
}

Vector CirculantOperator::from_schur_basis(std::span<const double> y) const {
  detail::require_length(y.size(), n(), "CirculantOperator::from_schur_basis");
  const bool circulant = kind() == SchurSide::circulant;
  return apply_q(transform_.apply(y, false), circulant);
}

Vector CirculantOperator::apply(std::span<const double> x) const {
  const Vector y = to_schur_basis(x);
  return from_schur_basis(xpattern_apply(core_, 0.0, ShiftSign::none, y));
}

Vector circulant_matvec(const CirculantOperator& op, std::span<const double> x) {
  if (op.kind() != SchurSide::circulant) {
    throw std::invalid_argument("circulant_matvec: operator is skew-circulant");
  }
  return op.apply(x);
}

Vector skew_circulant_matvec(const CirculantOperator& op, std::span<const double> x) {
  if (op.kind() != SchurSide::skew) {
    throw std::invalid_argument("skew_circulant_matvec: operator is circulant");
  }
  return op.apply(x);
}

ToeplitzOperator::ToeplitzOperator(const ToeplitzBands& t, DttBackend backend)
    : ToeplitzOperator(cscs_split(t), backend) {}

ToeplitzOperator::ToeplitzOperator(std::pair<CirculantCol, SkewCirculantCol> parts,
                                   DttBackend backend)
    : circulant_(parts.first, backend), skew_(parts.second, backend) {}

Vector ToeplitzOperator::apply(std::span<const double> x) const {
  Vector y = circulant_.apply(x);
  const Vector s = skew_.apply(x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += s[i];
  return y;
}

Vector toeplitz_matvec(const ToeplitzOperator& op, std::span<const double> x) { return op.apply(x); }

}  // namespace rschur
