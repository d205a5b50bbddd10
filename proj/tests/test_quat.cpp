#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcv/quat.hpp"

using namespace qcv;

namespace {

Quat unit(int s) {
  Quat q;
  if (s == 1)
    q.x = 1;
  else if (s == 2)
    q.y = 1;
  else
    q.z = 1;
  return q;
}

}  // namespace

TEST_CASE("quaternion multiplication follows the Hamilton convention") {
  const Quat i = unit(1), j = unit(2), k = unit(3);
  CHECK(quat_mul(i, j) == k);
  CHECK(quat_mul(j, k) == i);
  CHECK(quat_mul(k, i) == j);
  const Quat minus_one{-1, 0, 0, 0};
  CHECK(quat_mul(i, i) == minus_one);
  CHECK(quat_mul(j, j) == minus_one);
  CHECK(quat_mul(k, k) == minus_one);
  // anticommutativity
  Quat ji = quat_mul(j, i);
  CHECK(ji.z == -1);
}

TEST_CASE("unit matrices compose like the triple in both chirality realizations") {
  for (Chirality ch : {Chirality::Left, Chirality::Right}) {
    const RatMat i1 = quat_unit_matrix(1, ch);
    const RatMat i2 = quat_unit_matrix(2, ch);
    const RatMat i3 = quat_unit_matrix(3, ch);
    CHECK(i1 * i2 == i3);
    CHECK(i2 * i3 == i1);
    CHECK(i3 * i1 == i2);
    CHECK(i1 * i1 == -RatMat::identity(4));
    CHECK((i1 * i2) * i3 == -RatMat::identity(4));
  }
}

TEST_CASE("left-multiplication matrix reproduces quaternion products") {
  const Quat a{1, 2, -3, 5};
  const Quat b{-2, 1, 4, -1};
  const RatMat la = quat_left_matrix(a);
  const Quat ab = quat_mul(a, b);
  RatMat vb(4, 1);
  vb(0, 0) = b.w;
  vb(1, 0) = b.x;
  vb(2, 0) = b.y;
  vb(3, 0) = b.z;
  const RatMat vab = la * vb;
  CHECK(vab(0, 0) == ab.w);
  CHECK(vab(1, 0) == ab.x);
  CHECK(vab(2, 0) == ab.y);
  CHECK(vab(3, 0) == ab.z);
}

TEST_CASE("hypercomplex triples satisfy all invariants for n = 1..3") {
  for (int n = 1; n <= 3; ++n) {
    for (Chirality ch : {Chirality::Left, Chirality::Right}) {
      const HypercomplexTriple t = make_hypercomplex_triple(n, ch);
      CHECK(t.dim() == static_cast<std::size_t>(4 * n));
      CHECK_NOTHROW(check_triple_invariants(t));
      for (int s = 0; s < 3; ++s) {
        CHECK(is_antisymmetric(t.omega[s]));
        CHECK(t.omega[s] == t.I[s].transpose());
      }
      CHECK(is_symmetric(t.g));
    }
  }
}

TEST_CASE("omega_form is 1-based and matches the stored forms") {
  const HypercomplexTriple t = make_hypercomplex_triple(2);
  for (int s = 1; s <= 3; ++s) CHECK(omega_form(t, s) == t.omega[s - 1]);
}

TEST_CASE("deliberate violation: swapping I2 and I3 breaks the cyclic relation") {
  HypercomplexTriple t = make_hypercomplex_triple(1);
  std::swap(t.I[1], t.I[2]);
  CHECK_THROWS(check_triple_invariants(t));
}

TEST_CASE("deliberate violation: scaling one structure breaks I_s^2 = -Id") {
  HypercomplexTriple t = make_hypercomplex_triple(1);
  t.I[0] = t.I[0] * Rat(2);
  CHECK_THROWS(check_triple_invariants(t));
}
