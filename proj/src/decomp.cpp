#include "qcv/decomp.hpp"

#include <stdexcept>

namespace qcv {

namespace {

void check_dim(const HypercomplexTriple& t, const BilinearForm& P) {
  if (P.rows() != t.dim() || P.cols() != t.dim())
    throw std::invalid_argument("decomposition: form must be 4n x 4n");
}

// Matrix of (X,Y) -> P(I_s X, I_s Y); equals -I_s P I_s since I_s^T = -I_s.
BilinearForm conj(const HypercomplexTriple& t, const BilinearForm& P, int s) {
  return t.I[s].transpose() * P * t.I[s];
}

}  // namespace

FourPartDecomposition four_part_decompose(const HypercomplexTriple& t, const BilinearForm& P) {
  check_dim(t, P);
  const Rat quarter = frac(1, 4);
  BilinearForm c1 = conj(t, P, 0), c2 = conj(t, P, 1), c3 = conj(t, P, 2);
  FourPartDecomposition d;
  d.parts[0] = (P + c1 + c2 + c3) * quarter;
  d.parts[1] = (P + c1 - c2 - c3) * quarter;
  d.parts[2] = (P - c1 + c2 - c3) * quarter;
  d.parts[3] = (P - c1 - c2 + c3) * quarter;
  return d;
}

SpSpDecomposition sp_decompose(const HypercomplexTriple& t, const BilinearForm& P) {
  FourPartDecomposition d = four_part_decompose(t, P);
  SpSpDecomposition r;
  r.part3 = d.parts[0];
  r.partm1 = d.parts[1] + d.parts[2] + d.parts[3];
  return r;
}

BilinearForm casimir_apply(const HypercomplexTriple& t, const BilinearForm& P) {
  check_dim(t, P);
  return conj(t, P, 0) + conj(t, P, 1) + conj(t, P, 2);
}

BilinearForm casimir_apply_endo(const HypercomplexTriple& t, const BilinearForm& P) {
  check_dim(t, P);
  BilinearForm r(t.dim(), t.dim());
  for (int s = 0; s < 3; ++s) r = r - t.I[s] * P * t.I[s];
  return r;
}

SpSpDecomposition hessian_sp_decompose(const HypercomplexTriple& t, const BilinearForm& h) {
  check_dim(t, h);
  BilinearForm sum = conj(t, h, 0) + conj(t, h, 1) + conj(t, h, 2);
  SpSpDecomposition r;
  r.part3 = (h + sum) * frac(1, 4);
  r.partm1 = (h * Rat(3) - sum) * frac(1, 4);
  return r;
}

}  // namespace qcv
