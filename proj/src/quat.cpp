#include "qcv/quat.hpp"

namespace qcv {

Quat quat_mul(const Quat& a, const Quat& b) {
  return Quat{
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

Quat quat_add(const Quat& a, const Quat& b) {
  return Quat{a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

bool is_symmetric(const BilinearForm& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.cols(); ++j)
      if (b(i, j) != b(j, i)) return false;
  return true;
}

bool is_antisymmetric(const BilinearForm& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i; j < b.cols(); ++j)
      if (b(i, j) != -b(j, i)) return false;
  return true;
}

RatMat quat_left_matrix(const Quat& q) {
  // Columns are the images of 1, i, j, k under p -> q p.
  RatMat m(4, 4);
  const Quat basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 4; ++c) {
    Quat im = quat_mul(q, basis[c]);
    m(0, c) = im.w;
    m(1, c) = im.x;
    m(2, c) = im.y;
    m(3, c) = im.z;
  }
  return m;
}

RatMat quat_unit_matrix(int s, Chirality chirality) {
  if (s < 1 || s > 3) throw std::invalid_argument("quat_unit_matrix: s must be 1..3");
  Quat u{0, 0, 0, 0};
  if (s == 1) u.x = 1;
  if (s == 2) u.y = 1;
  if (s == 3) u.z = 1;
  RatMat m(4, 4);
  const Quat basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int c = 0; c < 4; ++c) {
    Quat im = chirality == Chirality::Left ? quat_mul(u, basis[c])
                                           : quat_mul(basis[c], Quat{-u.w, -u.x, -u.y, -u.z});
    m(0, c) = im.w;
    m(1, c) = im.x;
    m(2, c) = im.y;
    m(3, c) = im.z;
  }
  return m;
}

HypercomplexTriple make_hypercomplex_triple(int n, Chirality chirality) {
  if (n < 1) throw std::invalid_argument("make_hypercomplex_triple: n must be >= 1");
  HypercomplexTriple t;
  t.n = n;
  const std::size_t dim = t.dim();
  t.g = RatMat::identity(dim);
  for (int s = 1; s <= 3; ++s) {
    RatMat block = quat_unit_matrix(s, chirality);
    RatMat big(dim, dim);
    for (int a = 0; a < n; ++a)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) big(4 * a + i, 4 * a + j) = block(i, j);
    t.I[s - 1] = big;
    t.omega[s - 1] = big.transpose();
  }
  check_triple_invariants(t);
  return t;
}

BilinearForm omega_form(const HypercomplexTriple& t, int s) {
  if (s < 1 || s > 3) throw std::invalid_argument("omega_form: s must be 1..3");
  return t.omega[s - 1];
}

void check_triple_invariants(const HypercomplexTriple& t) {
  const std::size_t dim = t.dim();
  const RatMat id = RatMat::identity(dim);
  for (int s = 0; s < 3; ++s) {
    if (!((t.I[s] * t.I[s]) + id).is_zero())
      throw std::logic_error("hypercomplex triple: I_s^2 != -Id");
    if (!(t.I[s].transpose() * t.g * t.I[s] == t.g))
      throw std::logic_error("hypercomplex triple: I_s not g-orthogonal");
    if (!is_antisymmetric(t.omega[s]))
      throw std::logic_error("hypercomplex triple: omega_s not antisymmetric");
  }
  // Cyclic relations I_i I_j = I_k and anticommutation.
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& c : cyc) {
    if (!(t.I[c[0]] * t.I[c[1]] == t.I[c[2]]))
      throw std::logic_error("hypercomplex triple: I_i I_j != I_k");
    if (!((t.I[c[1]] * t.I[c[0]]) + t.I[c[2]]).is_zero())
      throw std::logic_error("hypercomplex triple: I_j I_i != -I_k");
  }
  if (!(((t.I[0] * t.I[1]) * t.I[2]) + id).is_zero())
    throw std::logic_error("hypercomplex triple: I1 I2 I3 != -Id");
}

}  // namespace qcv
