#pragma once

#include <array>

#include "qcv/quat.hpp"

namespace qcv {

// The four Sp(n)-invariant parts of an endomorphism/bilinear form on H,
// labelled by commutation signs with (I1, I2, I3): (+++), (+--), (-+-), (--+).
struct FourPartDecomposition {
  std::array<BilinearForm, 4> parts;

  const BilinearForm& ppp() const { return parts[0]; }
  const BilinearForm& pmm() const { return parts[1]; }
  const BilinearForm& mpm() const { return parts[2]; }
  const BilinearForm& mmp() const { return parts[3]; }
};

// The two Sp(n)Sp(1)-invariant components: [3] = (+++), [-1] = rest.
struct SpSpDecomposition {
  BilinearForm part3;
  BilinearForm partm1;
};

FourPartDecomposition four_part_decompose(const HypercomplexTriple& t, const BilinearForm& P);

SpSpDecomposition sp_decompose(const HypercomplexTriple& t, const BilinearForm& P);

// Casimir operator Upsilon = sum_s I_s (x) I_s acting in the bilinear-form
// sense, (Upsilon P)(X,Y) = sum_s P(I_s X, I_s Y).  Eigenvalue 3 on [3],
// -1 on [-1].
BilinearForm casimir_apply(const HypercomplexTriple& t, const BilinearForm& P);

// Same operator through the endomorphism viewpoint, Psi -> -sum_s I_s Psi I_s.
// Under the metric identification (g = Id) the two routes coincide.
BilinearForm casimir_apply_endo(const HypercomplexTriple& t, const BilinearForm& P);

// Invariant decomposition of a (not necessarily symmetric) horizontal Hessian:
//   h_[3](X,Y)  = 1/4 [ h(X,Y) + sum_s h(I_s X, I_s Y) ]
//   h_[-1](X,Y) = 1/4 [ 3 h(X,Y) - sum_s h(I_s X, I_s Y) ].
SpSpDecomposition hessian_sp_decompose(const HypercomplexTriple& t, const BilinearForm& h);

}  // namespace qcv
