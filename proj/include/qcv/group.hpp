#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcv/poly.hpp"
#include "qcv/quat.hpp"

namespace qcv {

// I_s acts on the standard horizontal basis as a signed permutation:
// I_s e_a = sign[a] * e_{row[a]}.
struct SignedPermutation {
  std::vector<int> row;
  std::vector<int> sign;
};

std::array<SignedPermutation, 3> signed_permutations(const HypercomplexTriple& t);

// Exact model of the flat quaternionic Heisenberg group G(H).
//
// Coordinates 0..4n-1 are horizontal, grouped (t_a, x_a, y_a, z_a) per
// quaternionic block; coordinates 4n..4n+2 are the vertical v_1, v_2, v_3.
// Left-invariant frame:
//   e_alpha = d/dx_alpha + sum_s (sum_beta omega_s[alpha][beta] x_beta) d/dv_s
//   xi_s    = d/dv_s
// which satisfies [e_a, e_b] = -2 sum_s omega_s(e_a,e_b) xi_s, a 2-step
// nilpotent center, and eta_s(xi_k) = delta_{sk} with d eta_s|H = 2 omega_s
// for eta_s = dv_s - sum omega_s[a][b] x_b dx_a.
//
// The Biquard connection of this structure is flat with parallel frame, zero
// torsion endomorphism (T^0 = U = 0), Ric = 0, S = 0, tau_s = rho_s = 0 and
// alpha_s = 0, so second covariant derivatives are iterated frame derivatives.
struct GroupModel {
  int n = 0;
  HypercomplexTriple triple;
  std::vector<PolyVectorField> horizontal_frame;  // 4n fields
  std::array<PolyVectorField, 3> reeb;

  // Flat structural data (all identically zero on G(H)).
  static constexpr int kNormalizedScalarCurvature = 0;

  int nvars() const { return 4 * n + 3; }
  std::size_t hdim() const { return static_cast<std::size_t>(4 * n); }
};

GroupModel build_group_model(int n, Chirality chirality = kDefaultChirality);

struct SelfCheckReport {
  bool pass = true;
  std::string first_violation;
};

// Recomputes brackets and the dual contact forms from the model data alone
// and verifies the structure equations exactly.
SelfCheckReport frame_structure_selfcheck(const GroupModel& m);

Poly apply_field(const PolyVectorField& v, const Poly& f);

std::vector<Poly> horizontal_gradient(const GroupModel& m, const Poly& f);

// Entry (a,b) = e_a(e_b f): the horizontal Hessian in the flat parallel frame.
std::vector<std::vector<Poly>> horizontal_hessian(const GroupModel& m, const Poly& f);

// Positive sub-Laplacian, -sum_a e_a(e_a f).
Poly sub_laplacian(const GroupModel& m, const Poly& f);

Poly vertical_derivative(const GroupModel& m, const Poly& f, int s);  // s in 1..3

// Residual of sum_a hess(e_a, I_s e_a) + 4n xi_s f per s; all-zero on G(H).
std::array<Poly, 3> check_trace_identity(const GroupModel& m, const Poly& f);

struct RicciResiduals {
  // (i) hess(e_a,e_b) - hess(e_b,e_a) + 2 sum_s omega_s(e_a,e_b) xi_s f
  std::vector<Poly> horizontal;
  // (ii) e_a(xi_s f) - xi_s(e_a f)
  std::vector<Poly> mixed;

  bool all_zero() const;
};

RicciResiduals check_ricci_identities(const GroupModel& m, const Poly& f);

// Residual of the Bochner formula on the flat group, with the sign of the
// positive sub-Laplacian carried through the whole derivation:
//   1/2 lap|grad f|^2 + |hess f|^2 - g(grad(lap f), grad f)
//     + 4 sum_s hess f(xi_s, I_s grad f)  == 0.
Poly check_bochner_pointwise(const GroupModel& m, const Poly& f);

// sum_s hess f(xi_s, I_s grad f) as a polynomial (shared by the Bochner and
// integral-lemma checks).
Poly vertical_hessian_term(const GroupModel& m, const Poly& f);

}  // namespace qcv
