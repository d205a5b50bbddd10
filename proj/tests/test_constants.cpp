#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcv/constants.hpp"

using namespace qcv;

TEST_CASE("n = 2 values match the closed forms") {
  const PaperConstants k = paper_constants(2);
  CHECK(k.c == frac(1, 7));
  CHECK(k.alpha_n == frac(26, 5));
  CHECK(k.beta_n == frac(51, 5));
  CHECK(k.lich_coeff == frac(1, 2));
  CHECK(k.cn_sq == frac(3, 2));
  CHECK(k.hess_coeff == frac(2, 3));
  CHECK(k.t0_coeff == frac(16, 3));
  CHECK(k.u_coeff == Rat(16));
  CHECK(k.s_coeff == frac(8, 3));
  CHECK(k.p_max_radicand == 77);
  const double closed = 2.0 + (2.0 + 2.0 * std::sqrt(77.0)) / 19.0;
  CHECK(std::abs(k.p_max - closed) <= 1e-12);
}

TEST_CASE("n = 1 is rejected") {
  CHECK_THROWS(paper_constants(1));
  CHECK_THROWS(bochner_coefficient_check(1));
  CHECK_THROWS(lichnerowicz_bound(1, Rat(1)));
}

TEST_CASE("the Corollary constant is the reciprocal of the Theorem coefficient") {
  for (int n = 2; n <= 10; ++n) {
    const PaperConstants k = paper_constants(n);
    CHECK(k.cn_sq * k.hess_coeff == 1);
  }
}

TEST_CASE("the eigenvalue bound is exactly 4n at the sphere curvature") {
  for (int n = 2; n <= 10; ++n)
    CHECK(lichnerowicz_bound(n, Rat(4 * (n + 2))) == Rat(4 * n));
  CHECK(lichnerowicz_bound(3, Rat(1)) == frac(3, 5));
  CHECK_THROWS(lichnerowicz_bound(3, Rat(0)));
}

TEST_CASE("p_max stays above 2 and decays to 3 for large n") {
  double prev = paper_constants(2).p_max;
  CHECK(prev > 3.0);
  for (int n : {10, 100, 10000, 1000000}) {
    const double p = paper_constants(n).p_max;
    CHECK(p > 2.0);
    CHECK(p < prev);
    prev = p;
  }
  CHECK(std::abs(paper_constants(1000000).p_max - 3.0) < 1e-5);
}

TEST_CASE("coefficient bookkeeping: cancellation and Laplacian slot are exact") {
  for (int n = 2; n <= 10; ++n) {
    const BochnerCoefficientReport r = bochner_coefficient_check(n);
    CHECK(r.xi_coefficient_vanishes);
    CHECK(r.laplacian_coefficient);
    CHECK(r.constraints_hold);
    CHECK(r.t0_coefficient);
  }
}

TEST_CASE("the U slot of the repackaging differs from beta_n by an exact factor 2") {
  for (int n = 2; n <= 10; ++n) {
    const BochnerCoefficientReport r = bochner_coefficient_check(n);
    CHECK_FALSE(r.u_coefficient);
    CHECK(r.u_actual == r.u_expected * 2);
  }
}

TEST_CASE("deliberate violation: perturbing c breaks the cancellation") {
  const BochnerCoefficientReport r = bochner_coefficient_check(2, frac(2, 7));
  CHECK_FALSE(r.xi_coefficient_vanishes);
}
