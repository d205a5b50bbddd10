#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "qcv/group.hpp"

namespace qcv {

// Element p * exp(-a * rho) of the Gaussian test ring, rho = sum of squares of
// all 4n+3 group coordinates.  Closed under frame derivatives (same rate);
// products of two rate-a elements have rate 2a.
struct GaussFn {
  Poly p;
  Rat a;
};

Poly rho_poly(int n);

GaussFn gauss_field_derivative(const GroupModel& m, const PolyVectorField& v, const GaussFn& f);
GaussFn gauss_product(const GaussFn& f, const GaussFn& g);

// Exact value coeff * (pi/b)^{dim/2} for the common rate b of a run; only
// values sharing (b, dim) combine.
struct ExactIntegral {
  Rat coeff;
  Rat b;
  int dim = 0;

  ExactIntegral operator+(const ExactIntegral& o) const;
  ExactIntegral operator-(const ExactIntegral& o) const;
  ExactIntegral operator*(const Rat& s) const;
  bool is_zero() const { return coeff == 0; }
};

// Product of one-dimensional moments int x^k exp(-b x^2) dx, normalized by the
// pure Gaussian factor: coeff = prod (k_i - 1)!! / (2b)^{k_i/2}, zero if any
// exponent is odd.
ExactIntegral gaussian_moment(const std::vector<unsigned>& mono, const Rat& b);

// int q.p * exp(-q.a * rho) over R^{4n+3}, in units of (pi/q.a)^{(4n+3)/2}.
ExactIntegral integrate_exact(const GroupModel& m, const GaussFn& q);

// Coefficient of int P*Q*exp(-b rho): computed term-pair-wise with parity
// pruning, without forming the product polynomial.
Rat moment_inner(const Poly& P, const Poly& Q, const Rat& b);

// int (nabla* sigma) Vol for sigma with 4n GaussFn components of a common
// rate; exactly zero by the divergence theorem.
ExactIntegral verify_divergence(const GroupModel& m, const std::vector<GaussFn>& sigma);

// Flat-group specializations of the two integral lemmas; residuals are exact
// integrals that must vanish.
ExactIntegral verify_lemma_gr2_flat(const GroupModel& m, const GaussFn& f);
ExactIntegral verify_lemma_gr1_flat(const GroupModel& m, const GaussFn& f);

// Exact rational ratio int |hess f|^2 / int |lap f|^2; empty when lap f == 0.
std::optional<Rat> verify_hessian_laplacian_bound(const GroupModel& m, const GaussFn& f);

// Seeded family of Gaussian-ring test functions with polynomial parts of
// degree <= maxdeg and rates cycling through {1/2, 1, 2}.
std::vector<GaussFn> gaussian_test_family(const GroupModel& m, int count, int maxdeg,
                                          std::uint64_t seed);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

// Importance-sampled Monte Carlo for int P(x) exp(-b rho) with the Gaussian
// factor as proposal; returns the estimate in the same coefficient units as
// ExactIntegral.  Chunked with per-chunk seeds: bit-identical for a fixed
// (seed, N) regardless of worker count.
McEstimate mc_integrate(int dim, const Rat& b,
                        const std::function<double(std::span<const double>)>& poly_part,
                        std::uint64_t n_samples, std::uint64_t seed, int workers = 1);

}  // namespace qcv
