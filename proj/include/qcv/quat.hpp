#pragma once

#include <array>
#include <stdexcept>

#include "qcv/matrix.hpp"
#include "qcv/rational.hpp"

namespace qcv {

// Exact-rational quaternion, Hamilton convention ij = k.
struct Quat {
  Rat w{0}, x{0}, y{0}, z{0};

  bool operator==(const Quat&) const = default;
};

Quat quat_mul(const Quat& a, const Quat& b);
Quat quat_add(const Quat& a, const Quat& b);

// Which realization of the unit quaternions acts on H^n = R^{4n}.
// Left:  I_s q = u_s * q.   Right: I_s q = -(q * u_s).
// Both satisfy I1 I2 = I3 and I_s^2 = -Id; plain right multiplication does not
// (compositions reverse), hence the sign in the Right variant.
enum class Chirality { Left, Right };

inline constexpr Chirality kDefaultChirality = Chirality::Left;

// Bilinear forms on H are carried as their 4n x 4n coefficient matrices,
// B[a][b] = B(e_a, e_b), in the g = Id standard frame.
using BilinearForm = RatMat;

bool is_symmetric(const BilinearForm& b);
bool is_antisymmetric(const BilinearForm& b);

// The hypercomplex triple (I1, I2, I3) with metric g = Id and fundamental
// 2-forms omega_s[a][b] = g(I_s e_a, e_b)  (equivalently omega_s = I_s^T).
struct HypercomplexTriple {
  int n = 0;
  std::array<RatMat, 3> I;
  RatMat g;
  std::array<RatMat, 3> omega;

  std::size_t dim() const { return static_cast<std::size_t>(4 * n); }
};

// 4x4 matrix of q -> u q (Left) or q -> -(q u) (Right) for a unit u in {i,j,k};
// s is 1-based.
RatMat quat_unit_matrix(int s, Chirality chirality);

// Matrix of left multiplication by an arbitrary quaternion (n=1 realization).
RatMat quat_left_matrix(const Quat& q);

HypercomplexTriple make_hypercomplex_triple(int n, Chirality chirality = kDefaultChirality);

// omega_s as a BilinearForm; s is 1-based.
BilinearForm omega_form(const HypercomplexTriple& t, int s);

// Exhaustive exact verification of the type invariants; throws on violation.
void check_triple_invariants(const HypercomplexTriple& t);

}  // namespace qcv
