#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcv/group.hpp"

using namespace qcv;

TEST_CASE("group model builds and passes the structural self-check for n = 1, 2") {
  for (int n = 1; n <= 2; ++n) {
    const GroupModel m = build_group_model(n);
    CHECK(m.horizontal_frame.size() == static_cast<std::size_t>(4 * n));
    CHECK(frame_structure_selfcheck(m).pass);
  }
  CHECK_THROWS(build_group_model(0));
}

TEST_CASE("horizontal brackets produce exactly the vertical structure constants") {
  const GroupModel m = build_group_model(1);
  for (std::size_t a = 0; a < m.hdim(); ++a)
    for (std::size_t b = 0; b < m.hdim(); ++b) {
      const PolyVectorField br = lie_bracket(m.horizontal_frame[a], m.horizontal_frame[b]);
      for (std::size_t c = 0; c < m.hdim(); ++c) CHECK(br.coeffs[c].is_zero());
      for (int s = 0; s < 3; ++s) {
        const Poly expect =
            Poly::constant(m.nvars(), m.triple.omega[s](a, b) * Rat(-2));
        CHECK(br.coeffs[4 * m.n + s] ==
              (m.triple.omega[s](a, b) == 0 ? Poly(m.nvars()) : expect));
      }
    }
}

TEST_CASE("trace, Ricci, and Bochner identities vanish on random polynomials") {
  const GroupModel m = build_group_model(2);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Poly f = random_poly(rng, m.nvars(), 4, 6);
    for (const Poly& r : check_trace_identity(m, f)) CHECK(r.is_zero());
    CHECK(check_ricci_identities(m, f).all_zero());
    CHECK(check_bochner_pointwise(m, f).is_zero());
  }
}

TEST_CASE("sub-Laplacian is the positive horizontal trace") {
  const GroupModel m = build_group_model(1);
  // f = t_0^2 has hess diag (2,0,0,0), so lap f = -2
  const Poly f = Poly::variable(m.nvars(), 0) * Poly::variable(m.nvars(), 0);
  CHECK(sub_laplacian(m, f) == Poly::constant(m.nvars(), -2));
}

TEST_CASE("vertical derivatives pick out the center coordinates") {
  const GroupModel m = build_group_model(1);
  for (int s = 1; s <= 3; ++s) {
    const Poly v = Poly::variable(m.nvars(), 4 * m.n + (s - 1));
    CHECK(vertical_derivative(m, v, s) == Poly::constant(m.nvars(), 1));
    CHECK(vertical_derivative(m, v, s % 3 + 1).is_zero());
  }
  CHECK_THROWS(vertical_derivative(m, Poly(m.nvars()), 4));
}

TEST_CASE("deliberate violation: rescaling a Reeb field fails the self-check") {
  GroupModel m = build_group_model(1);
  m.reeb[0].coeffs[4 * m.n] = Poly::constant(m.nvars(), 2);
  const SelfCheckReport rep = frame_structure_selfcheck(m);
  CHECK_FALSE(rep.pass);
  CHECK(!rep.first_violation.empty());
}

TEST_CASE("deliberate violation: swapping two frame fields breaks the brackets") {
  GroupModel m = build_group_model(1);
  std::swap(m.horizontal_frame[0], m.horizontal_frame[1]);
  CHECK_FALSE(frame_structure_selfcheck(m).pass);
}

TEST_CASE("signed permutations reproduce the I_s action on the frame") {
  const GroupModel m = build_group_model(2);
  const auto perms = signed_permutations(m.triple);
  for (int s = 0; s < 3; ++s)
    for (std::size_t a = 0; a < m.hdim(); ++a) {
      const int r = perms[s].row[a];
      CHECK(m.triple.I[s](r, a) == Rat(perms[s].sign[a]));
    }
}
