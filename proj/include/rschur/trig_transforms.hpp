#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rschur {

enum class DttFamily { I, II, V, VI };
enum class DttFlavor { cosine, sine };

/// One of the eight orthogonal trigonometric transforms used here:
/// DCT-I/II/V/VI and DST-I/II/V/VI.
struct DttKind {
  DttFamily family;
  DttFlavor flavor;

  friend bool operator==(const DttKind&, const DttKind&) = default;

  static constexpr std::array<DttKind, 8> all() {
    return {{{DttFamily::I, DttFlavor::cosine},
             {DttFamily::II, DttFlavor::cosine},
             {DttFamily::V, DttFlavor::cosine},
             {DttFamily::VI, DttFlavor::cosine},
             {DttFamily::I, DttFlavor::sine},
             {DttFamily::II, DttFlavor::sine},
             {DttFamily::V, DttFlavor::sine},
             {DttFamily::VI, DttFlavor::sine}}};
  }
};

inline constexpr DttKind kDctI{DttFamily::I, DttFlavor::cosine};
inline constexpr DttKind kDctII{DttFamily::II, DttFlavor::cosine};
inline constexpr DttKind kDctV{DttFamily::V, DttFlavor::cosine};
inline constexpr DttKind kDctVI{DttFamily::VI, DttFlavor::cosine};
inline constexpr DttKind kDstI{DttFamily::I, DttFlavor::sine};
inline constexpr DttKind kDstII{DttFamily::II, DttFlavor::sine};
inline constexpr DttKind kDstV{DttFamily::V, DttFlavor::sine};
inline constexpr DttKind kDstVI{DttFamily::VI, DttFlavor::sine};

/// "DCT-II", "DST-V", ...
std::string to_string(DttKind kind);

/// Dense size x size transform matrix, evaluated entry by entry from the
/// cosine/sine definitions with orthonormal scaling (M M^T = I).
/// Throws DimensionError for size 0.
Eigen::MatrixXd dtt_matrix(DttKind kind, std::size_t size);

enum class DttBackend { definitional, fast };

/// A transform of fixed kind and size. The fast backend embeds the
/// transform in a complex DFT of length 2n, 4n, 2n+-1 or 2(2n+-1) and runs
/// in O(n log n); the definitional backend multiplies by dtt_matrix().
/// Immutable after construction.
class DttPlan {
 public:
  DttPlan(DttKind kind, std::size_t size, DttBackend backend = DttBackend::fast);

  DttKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  DttBackend backend() const noexcept { return backend_; }

  /// M x, or M^T x when `transposed`. Throws DimensionError on length mismatch.
  std::vector<double> apply(std::span<const double> x, bool transposed = false) const;

 private:
  std::vector<double> apply_fast(std::span<const double> x, bool transposed) const;

  DttKind kind_;
  std::size_t size_;
  DttBackend backend_;

  // M[j][k] = scale * out_weight[j] * in_weight[k] * trig(2 pi out_pos[j] in_pos[k] / period)
  std::size_t period_ = 0;
  std::vector<std::size_t> in_pos_, out_pos_;
  std::vector<double> in_weight_, out_weight_;
  double scale_ = 1.0;

  Eigen::MatrixXd dense_;
};

inline std::vector<double> dtt_apply(const DttPlan& plan, std::span<const double> x,
                                     bool transposed = false) {
  return plan.apply(x, transposed);
}

struct TransformEvent {
  DttKind kind;
  std::size_t size;
};

/// Records every DttPlan::apply made on the constructing thread while alive.
/// Tallies nest; an application is recorded in every live tally.
class TransformTally {
 public:
  TransformTally();
  ~TransformTally();
  TransformTally(const TransformTally&) = delete;
  TransformTally& operator=(const TransformTally&) = delete;

  const std::vector<TransformEvent>& events() const noexcept { return events_; }
  std::size_t count(DttFlavor flavor) const noexcept;
  void clear() noexcept { events_.clear(); }

  static void record(DttKind kind, std::size_t size);

 private:
  std::vector<TransformEvent> events_;
  TransformTally* outer_;
};

}  // namespace rschur
