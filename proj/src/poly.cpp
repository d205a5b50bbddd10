#include "qcv/poly.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qcv {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.add_term(e, Rat(1));
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (t > d) d = t;
  }
  return d;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: nvars mismatch");
  Poly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = static_cast<unsigned char>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const Rat& s) const {
  Poly r(nvars_);
  if (s == 0) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("Poly::derivative: bad variable");
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(static_cast<int>(e[var])));
  }
  return r;
}

double Poly::eval(std::span<const double> x) const {
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = static_cast<double>(c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    total += t;
  }
  return total;
}

Rat Poly::eval_exact(const std::vector<Rat>& x) const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    total += t;
  }
  return total;
}

Poly PolyVectorField::apply(const Poly& f) const {
  if (f.nvars() != nvars) throw std::invalid_argument("PolyVectorField::apply: nvars mismatch");
  Poly r(nvars);
  for (int i = 0; i < nvars; ++i) {
    if (coeffs[i].is_zero()) continue;
    r = r + coeffs[i] * f.derivative(i);
  }
  return r;
}

bool PolyVectorField::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

PolyVectorField lie_bracket(const PolyVectorField& v, const PolyVectorField& w) {
  if (v.nvars != w.nvars) throw std::invalid_argument("lie_bracket: nvars mismatch");
  PolyVectorField r(v.nvars);
  for (int j = 0; j < v.nvars; ++j) r.coeffs[j] = v.apply(w.coeffs[j]) - w.apply(v.coeffs[j]);
  return r;
}

Poly random_poly(std::mt19937_64& rng, int nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> degree_dist(0, maxdeg);
  std::uniform_int_distribution<int> var_dist(0, nvars - 1);
  std::uniform_int_distribution<int> coeff_dist(-5, 5);
  Poly p(nvars);
  for (int t = 0; t < nterms; ++t) {
    Poly::Exponents e(nvars, 0);
    int d = degree_dist(rng);
    for (int k = 0; k < d; ++k) e[var_dist(rng)] += 1;
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    p.add_term(e, Rat(c));
  }
  return p;
}

}  // namespace qcv
