#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "rschur/errors.hpp"
#include "rschur/trig_transforms.hpp"

using namespace rschur;

namespace {

const double kR2 = 1.0 / std::sqrt(2.0);

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

TEST_CASE("dtt_matrix: small hand-evaluated entries") {
  const auto m = dtt_matrix(kDctII, 2);
  CHECK(m(0, 0) == doctest::Approx(kR2).epsilon(1e-15));
  CHECK(m(0, 1) == doctest::Approx(kR2).epsilon(1e-15));
  CHECK(m(1, 0) == doctest::Approx(kR2).epsilon(1e-15));
  CHECK(m(1, 1) == doctest::Approx(-kR2).epsilon(1e-15));

  const auto s = dtt_matrix(kDstI, 1);
  REQUIRE(s.rows() == 1);
  CHECK(s(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("dtt_matrix: size zero is rejected") {
  for (auto kind : DttKind::all()) {
    CHECK_THROWS_AS(dtt_matrix(kind, 0), DimensionError);
    CHECK_THROWS_AS(DttPlan(kind, 0), DimensionError);
  }
}

TEST_CASE("dtt_matrix: orthogonal for every kind up to 64") {
  for (auto kind : DttKind::all()) {
    for (std::size_t s = 1; s <= 64; ++s) {
      const auto m = dtt_matrix(kind, s);
      const auto id = Eigen::MatrixXd::Identity(m.rows(), m.cols());
      INFO(to_string(kind), " size ", s);
      CHECK(oracle::max_abs(m * m.transpose() - id) < 1e-12);
    }
  }
}

TEST_CASE("dtt_matrix: type I transforms are symmetric") {
  for (std::size_t s = 1; s <= 40; ++s) {
    for (auto kind : {kDctI, kDstI}) {
      const auto m = dtt_matrix(kind, s);
      CHECK(m == m.transpose());
    }
  }
}

TEST_CASE("dtt_apply: worked products") {
  const DttPlan dct2(kDctII, 2);
  const auto y = dtt_apply(dct2, std::vector<double>{1.0, 0.0});
  CHECK(y[0] == doctest::Approx(kR2).epsilon(1e-14));
  CHECK(y[1] == doctest::Approx(kR2).epsilon(1e-14));

  const DttPlan dct1(kDctI, 3);
  const auto z = dtt_apply(dct1, std::vector<double>{1.0, 1.0, 1.0});
  CHECK(z[0] == doctest::Approx(1.0 + kR2).epsilon(1e-14));
  CHECK(std::abs(z[1]) < 1e-14);
  CHECK(z[2] == doctest::Approx(1.0 - kR2).epsilon(1e-14));
}

TEST_CASE("dtt_apply: length mismatch") {
  const DttPlan plan(kDstV, 4);
  CHECK_THROWS_AS(plan.apply(std::vector<double>(3, 1.0)), DimensionError);
  CHECK_THROWS_AS(plan.apply(std::vector<double>(5, 1.0), true), DimensionError);
}

TEST_CASE("dtt_apply: fast path matches the definitional matrix") {
  oracle::Gen gen(11);
  for (auto kind : DttKind::all()) {
    for (std::size_t s = 1; s <= 512; s += (s < 40 ? 1 : 37)) {
      const DttPlan fast(kind, s, DttBackend::fast);
      const DttPlan slow(kind, s, DttBackend::definitional);
      const auto x = gen.vec(s);
      INFO(to_string(kind), " size ", s);
      CHECK(oracle::rel_error(fast.apply(x), slow.apply(x)) < 1e-12);
      CHECK(oracle::rel_error(fast.apply(x, true), slow.apply(x, true)) < 1e-12);
    }
  }
}

TEST_CASE("dtt_apply: round trip and norm preservation") {
  oracle::Gen gen(12);
  for (auto kind : DttKind::all()) {
    for (std::size_t s : {1, 2, 3, 8, 31, 64, 100, 257}) {
      for (auto backend : {DttBackend::fast, DttBackend::definitional}) {
        const DttPlan plan(kind, s, backend);
        const auto x = gen.vec(s);
        const auto y = plan.apply(x);
        CHECK(oracle::max_abs_diff(plan.apply(y, true), x) < 1e-12);
        CHECK(std::abs(norm2(y) - norm2(x)) < 1e-12 * norm2(x));
      }
    }
  }
}

TEST_CASE("dtt_apply: plans are reusable and deterministic") {
  oracle::Gen gen(13);
  const DttPlan plan(kDctVI, 77);
  const auto x = gen.vec(77);
  CHECK(plan.apply(x) == plan.apply(x));
}

TEST_CASE("TransformTally counts applications by flavor") {
  const DttPlan c(kDctV, 5), s(kDstII, 4);
  TransformTally outer;
  {
    TransformTally inner;
    c.apply(std::vector<double>(5, 1.0));
    s.apply(std::vector<double>(4, 1.0), true);
    CHECK(inner.count(DttFlavor::cosine) == 1);
    CHECK(inner.count(DttFlavor::sine) == 1);
  }
  c.apply(std::vector<double>(5, 1.0));
  CHECK(outer.count(DttFlavor::cosine) == 2);
  CHECK(outer.events().size() == 3);
  CHECK(outer.events()[1].size == 4);
}

TEST_CASE("to_string names") {
  CHECK(to_string(kDctI) == "DCT-I");
  CHECK(to_string(kDstVI) == "DST-VI");
}
