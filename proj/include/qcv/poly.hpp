#pragma once

#include <map>
#include <random>
#include <span>
#include <vector>

#include "qcv/rational.hpp"

namespace qcv {

// Exact multivariate polynomial over the rationals.  Exponent vectors are the
// map keys; the map never stores zero coefficients.
class Poly {
 public:
  using Exponents = std::vector<unsigned char>;
  using TermMap = std::map<Exponents, Rat>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rat& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  Poly derivative(int var) const;

  double eval(std::span<const double> x) const;
  Rat eval_exact(const std::vector<Rat>& x) const;

 private:
  int nvars_;
  TermMap terms_;
};

// First-order differential operator sum_i c_i(x) d/dx_i with Poly coefficients.
struct PolyVectorField {
  int nvars = 0;
  std::vector<Poly> coeffs;

  PolyVectorField() = default;
  explicit PolyVectorField(int nv) : nvars(nv), coeffs(nv, Poly(nv)) {}

  Poly apply(const Poly& f) const;
  bool is_zero() const;
};

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w);

// Sparse random polynomial with small integer coefficients; degree <= maxdeg.
Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms);

}  // namespace qcv
