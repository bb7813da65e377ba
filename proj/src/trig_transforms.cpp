#include "rschur/trig_transforms.hpp"

#include <cmath>
#include <numbers>

#include "rschur/errors.hpp"
#include "rschur/fft.hpp"

namespace rschur {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;

thread_local TransformTally* active_tally = nullptr;

// Entry (j, k) of the orthonormal transform, 0-based row/column indices.
double dtt_entry(DttKind kind, std::size_t size, std::size_t row, std::size_t col) {
  const double n = static_cast<double>(size);
  const double j = static_cast<double>(row);
  const double k = static_cast<double>(col);
  const std::size_t last = size - 1;

  if (kind.flavor == DttFlavor::cosine) {
    switch (kind.family) {
      case DttFamily::I: {
        // C^I_{N+1} with N = size - 1; tau is 1/sqrt2 at both ends.
        if (size == 1) return 1.0;
        const double big_n = n - 1.0;
        const double tj = (row == 0 || row == last) ? kInvSqrt2 : 1.0;
        const double tk = (col == 0 || col == last) ? kInvSqrt2 : 1.0;
        return std::sqrt(2.0 / big_n) * tj * tk * std::cos(j * k * kPi / big_n);
      }
      case DttFamily::II: {
        const double tj = row == 0 ? kInvSqrt2 : 1.0;
        return std::sqrt(2.0 / n) * tj * std::cos(j * (2.0 * k + 1.0) * kPi / (2.0 * n));
      }
      case DttFamily::V: {
        const double tj = row == 0 ? kInvSqrt2 : 1.0;
        const double tk = col == 0 ? kInvSqrt2 : 1.0;
        return 2.0 / std::sqrt(2.0 * n - 1.0) * tj * tk *
               std::cos(2.0 * j * k * kPi / (2.0 * n - 1.0));
      }
      case DttFamily::VI: {
        const double tj = row == 0 ? kInvSqrt2 : 1.0;
        const double ik = col == last ? kInvSqrt2 : 1.0;
        return 2.0 / std::sqrt(2.0 * n - 1.0) * tj * ik *
               std::cos(j * (2.0 * k + 1.0) * kPi / (2.0 * n - 1.0));
      }
    }
  } else {
    // Sine matrices are indexed from 1 in their definitions.
    const double j1 = j + 1.0;
    const double k1 = k + 1.0;
    switch (kind.family) {
      case DttFamily::I:
        return std::sqrt(2.0 / (n + 1.0)) * std::sin(j1 * k1 * kPi / (n + 1.0));
      case DttFamily::II: {
        const double tj = row == last ? kInvSqrt2 : 1.0;
        return std::sqrt(2.0 / n) * tj * std::sin(j1 * (2.0 * k1 - 1.0) * kPi / (2.0 * n));
      }
      case DttFamily::V:
        return 2.0 / std::sqrt(2.0 * n + 1.0) * std::sin(2.0 * j1 * k1 * kPi / (2.0 * n + 1.0));
      case DttFamily::VI:
        return 2.0 / std::sqrt(2.0 * n + 1.0) *
               std::sin(j1 * (2.0 * k1 - 1.0) * kPi / (2.0 * n + 1.0));
    }
  }
  return 0.0;
}

}  // namespace

std::string to_string(DttKind kind) {
  std::string s = kind.flavor == DttFlavor::cosine ? "DCT-" : "DST-";
  switch (kind.family) {
    case DttFamily::I: return s + "I";
    case DttFamily::II: return s + "II";
    case DttFamily::V: return s + "V";
    case DttFamily::VI: return s + "VI";
  }
  return s;
}

Eigen::MatrixXd dtt_matrix(DttKind kind, std::size_t size) {
  if (size == 0) throw DimensionError("dtt_matrix: size must be positive");
  const auto n = static_cast<Eigen::Index>(size);
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      m(j, k) = dtt_entry(kind, size, static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    }
  }
  return m;
}

DttPlan::DttPlan(DttKind kind, std::size_t size, DttBackend backend)
    : kind_(kind), size_(size), backend_(backend) {
  if (size == 0) throw DimensionError("DttPlan: size must be positive");
  if (backend == DttBackend::definitional) {
    dense_ = dtt_matrix(kind, size);
    return;
  }

  const double n = static_cast<double>(size);
  in_pos_.resize(size);
  out_pos_.resize(size);
  in_weight_.assign(size, 1.0);
  out_weight_.assign(size, 1.0);
  const std::size_t last = size - 1;

  // Sample positions on a grid of `period_` points; see the matrix layout
  // comment in the header.
  auto set_positions = [&](std::size_t in_stride, std::size_t in_offset, std::size_t out_offset) {
    for (std::size_t i = 0; i < size; ++i) {
      in_pos_[i] = in_stride * i + in_offset;
      out_pos_[i] = i + out_offset;
    }
  };

  if (kind.flavor == DttFlavor::cosine) {
    switch (kind.family) {
      case DttFamily::I:
        if (size == 1) {
          period_ = 1;
          set_positions(1, 0, 0);
          break;
        }
        period_ = 2 * last;
        set_positions(1, 0, 0);
        in_weight_.front() = in_weight_.back() = kInvSqrt2;
        out_weight_.front() = out_weight_.back() = kInvSqrt2;
        scale_ = std::sqrt(2.0 / (n - 1.0));
        break;
      case DttFamily::II:
        period_ = 4 * size;
        set_positions(2, 1, 0);
        out_weight_.front() = kInvSqrt2;
        scale_ = std::sqrt(2.0 / n);
        break;
      case DttFamily::V:
        period_ = 2 * size - 1;
        set_positions(1, 0, 0);
        in_weight_.front() = out_weight_.front() = kInvSqrt2;
        scale_ = 2.0 / std::sqrt(2.0 * n - 1.0);
        break;
      case DttFamily::VI:
        period_ = 2 * (2 * size - 1);
        set_positions(2, 1, 0);
        in_weight_.back() = kInvSqrt2;
        out_weight_.front() = kInvSqrt2;
        scale_ = 2.0 / std::sqrt(2.0 * n - 1.0);
        break;
    }
  } else {
    switch (kind.family) {
      case DttFamily::I:
        period_ = 2 * (size + 1);
        set_positions(1, 1, 1);
        scale_ = std::sqrt(2.0 / (n + 1.0));
        break;
      case DttFamily::II:
        period_ = 4 * size;
        set_positions(2, 1, 1);
        out_weight_.back() = kInvSqrt2;
        scale_ = std::sqrt(2.0 / n);
        break;
      case DttFamily::V:
        period_ = 2 * size + 1;
        set_positions(1, 1, 1);
        scale_ = 2.0 / std::sqrt(2.0 * n + 1.0);
        break;
      case DttFamily::VI:
        period_ = 2 * (2 * size + 1);
        set_positions(2, 1, 1);
        scale_ = 2.0 / std::sqrt(2.0 * n + 1.0);
        break;
    }
  }
}

std::vector<double> DttPlan::apply(std::span<const double> x, bool transposed) const {
  detail::require_length(x.size(), size_, "DttPlan::apply");
  TransformTally::record(kind_, size_);
  if (backend_ == DttBackend::fast) return apply_fast(x, transposed);

  Eigen::Map<const Eigen::VectorXd> in(x.data(), static_cast<Eigen::Index>(x.size()));
  std::vector<double> out(size_);
  Eigen::Map<Eigen::VectorXd> y(out.data(), static_cast<Eigen::Index>(size_));
  if (transposed) {
    y.noalias() = dense_.transpose() * in;
  } else {
    y.noalias() = dense_ * in;
  }
  return out;
}

std::vector<double> DttPlan::apply_fast(std::span<const double> x, bool transposed) const {
  // Forward: scatter x at the input sample positions and read the DFT at the
  // output frequencies. Transposed swaps the two roles.
  const auto& scatter_pos = transposed ? out_pos_ : in_pos_;
  const auto& scatter_w = transposed ? out_weight_ : in_weight_;
  const auto& gather_pos = transposed ? in_pos_ : out_pos_;
  const auto& gather_w = transposed ? in_weight_ : out_weight_;

  std::vector<Complex> buf(period_, Complex{});
  for (std::size_t i = 0; i < size_; ++i) buf[scatter_pos[i]] = scatter_w[i] * x[i];
  const auto spec = dft(buf);

  std::vector<double> y(size_);
  const bool cosine = kind_.flavor == DttFlavor::cosine;
  for (std::size_t i = 0; i < size_; ++i) {
    const Complex v = spec[gather_pos[i]];
    y[i] = scale_ * gather_w[i] * (cosine ? v.real() : -v.imag());
  }
  return y;
}

TransformTally::TransformTally() : outer_(active_tally) { active_tally = this; }

TransformTally::~TransformTally() { active_tally = outer_; }

std::size_t TransformTally::count(DttFlavor flavor) const noexcept {
  std::size_t c = 0;
  for (const auto& e : events_) c += e.kind.flavor == flavor ? 1 : 0;
  return c;
}

void TransformTally::record(DttKind kind, std::size_t size) {
  for (auto* t = active_tally; t != nullptr; t = t->outer_) t->events_.push_back({kind, size});
}

}  // namespace rschur
