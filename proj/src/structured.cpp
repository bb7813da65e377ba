#include "rschur/structured.hpp"

#include <string>

#include "rschur/errors.hpp"

namespace rschur {

ToeplitzBands::ToeplitzBands(Vector coeffs) : n_((coeffs.size() + 1) / 2), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0) {
    throw DimensionError("Toeplitz bands need odd length 2n-1, got " +
                         std::to_string(coeffs_.size()));
  }
}

CirculantCol::CirculantCol(Vector col) : col_(std::move(col)) {
  if (col_.empty()) throw DimensionError("circulant first column is empty");
}

SkewCirculantCol::SkewCirculantCol(Vector col) : col_(std::move(col)) {
  if (col_.empty()) throw DimensionError("skew-circulant first column is empty");
}

ToeplitzBands toeplitz_from_bands(std::span<const double> coeffs) {
  return ToeplitzBands(Vector(coeffs.begin(), coeffs.end()));
}

std::pair<CirculantCol, SkewCirculantCol> cscs_split(const ToeplitzBands& t) {
  const auto n = static_cast<std::ptrdiff_t>(t.n());
  Vector c(t.n()), s(t.n());
  c[0] = s[0] = t.t(0) / 2.0;
  for (std::ptrdiff_t l = 1; l < n; ++l) {
    const double head = t.t(l);
    const double wrap = t.t(l - n);
    c[static_cast<std::size_t>(l)] = (head + wrap) / 2.0;
    s[static_cast<std::size_t>(l)] = (head - wrap) / 2.0;
  }
  return {CirculantCol(std::move(c)), SkewCirculantCol(std::move(s))};
}

Eigen::MatrixXd dense_of(const ToeplitzBands& t) {
  const auto n = static_cast<Eigen::Index>(t.n());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) m(j, k) = t.t(j - k);
  return m;
}

Eigen::MatrixXd dense_of(const CirculantCol& c) {
  const auto n = static_cast<Eigen::Index>(c.n());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) m(j, k) = c.col()[static_cast<std::size_t>((j - k + n) % n)];
  return m;
}

Eigen::MatrixXd dense_of(const SkewCirculantCol& s) {
  const auto n = static_cast<Eigen::Index>(s.n());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      m(j, k) = j >= k ? s.col()[static_cast<std::size_t>(j - k)]
                       : -s.col()[static_cast<std::size_t>(j - k + n)];
    }
  }
  return m;
}

Vector naive_matvec(const ToeplitzBands& t, std::span<const double> x) {
  detail::require_length(x.size(), t.n(), "naive_matvec(Toeplitz)");
  const auto n = static_cast<std::ptrdiff_t>(t.n());
  Vector y(t.n(), 0.0);
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::ptrdiff_t k = 0; k < n; ++k) acc += t.t(j - k) * x[static_cast<std::size_t>(k)];
    y[static_cast<std::size_t>(j)] = acc;
  }
  return y;
}

Vector naive_matvec(const CirculantCol& c, std::span<const double> x) {
  detail::require_length(x.size(), c.n(), "naive_matvec(circulant)");
  const std::size_t n = c.n();
  Vector y(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) acc += c.col()[(j + n - k) % n] * x[k];
    y[j] = acc;
  }
  return y;
}

Vector naive_matvec(const SkewCirculantCol& s, std::span<const double> x) {
  detail::require_length(x.size(), s.n(), "naive_matvec(skew-circulant)");
  const std::size_t n = s.n();
  Vector y(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= j; ++k) acc += s.col()[j - k] * x[k];
    for (std::size_t k = j + 1; k < n; ++k) acc -= s.col()[j + n - k] * x[k];
    y[j] = acc;
  }
  return y;
}

}  // namespace rschur
