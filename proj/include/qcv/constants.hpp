#pragma once

#include <optional>

#include "qcv/rational.hpp"

namespace qcv {

// Closed-form constants of the eigenvalue estimate, all exact rationals
// except p_max (algebraic; the radicand 16n^2+8n-3 is kept exact).
struct PaperConstants {
  int n = 0;
  Rat c;            // (n-1)/(4n-1)
  Rat alpha_n;      // 2(4n+5)/(2n+1)
  Rat beta_n;       // 3(2n^2+5n-1)/((2n+1)(n-1))
  Rat lich_coeff;   // n/(n+2)
  Rat cn_sq;        // (n+1)/n
  Rat hess_coeff;   // n/(n+1)
  Rat t0_coeff;     // 2n(n+2)/(n+1)
  Rat u_coeff;      // 4n^2/(n-1)
  Rat s_coeff;      // 2n^2/(n+1)
  Rat p_max_radicand;  // 16n^2+8n-3
  double p_max;        // 2 + (n + n*sqrt(radicand))/(4n^2+2n-1)
};

// Requires n >= 2: beta_n and u_coeff are singular at n = 1 and the
// statements assume dimension 4n+3 > 7.
PaperConstants paper_constants(int n);

// n*k0/(n+2); with k0 = 4(n+2) this is exactly 4n.
Rat lichnerowicz_bound(int n, const Rat& k0);

// Exact per-n recomputation of the coefficient bookkeeping in the main
// eigenvalue-estimate derivation.  With the printed c = (n-1)/(4n-1):
//   (i)   the vertical-gradient coefficient 16n^2(1/(4n) - (1-c)/(4n^2) - c/n)
//         vanishes;
//   (ii)  the (lap f)^2 coefficient 1/(4n) + 3(1-c)/(4n^2) - 1 equals
//         2(1-n)(2n+1)/(n(4n-1));
//   (iii) the admissibility constraints 1 + 3(1-c)/n >= 0, 1 - (1-c)/n >= 0;
//   (iv)  rewriting Ric - 6n/(4n-1) sum tau_s(I_s., .) + (4n+2)/(4n-1)
//         sum T(xi_s, I_s., .) in the {Ric, T0, U} basis must reproduce the
//         common factor 2(n-1)(2n+1)/((4n-1)(n+2)) times {1, alpha_n, beta_n}.
// The substitution inputs are the torsion identities
//   sum_s tau_s(I_sX,Y)    = (n+2)/n T0(X,Y) + 3 S g(X,Y),
//   sum_s T(xi_s,I_sX,Y)   = T0(X,Y) - 3 U(X,Y),
//   Ric                    = (2n+2) T0 + (4n+10) U + 2(n+2) S g.
struct BochnerCoefficientReport {
  int n = 0;
  Rat c;
  bool xi_coefficient_vanishes = false;  // (i)
  bool laplacian_coefficient = false;    // (ii)
  bool constraints_hold = false;         // (iii)
  bool t0_coefficient = false;           // (iv), T0 slot
  bool u_coefficient = false;            // (iv), U slot
  Rat common_factor;                     // 2(n-1)(2n+1)/((4n-1)(n+2))
  Rat u_expected;                        // common_factor * beta_n
  Rat u_actual;                          // coefficient produced by substitution

  bool all_pass() const {
    return xi_coefficient_vanishes && laplacian_coefficient && constraints_hold &&
           t0_coefficient && u_coefficient;
  }
};

// c_override perturbs the cancellation constant (for deliberate-violation
// tests); by default the printed value is used.
BochnerCoefficientReport bochner_coefficient_check(int n,
                                                   std::optional<Rat> c_override = std::nullopt);

}  // namespace qcv
