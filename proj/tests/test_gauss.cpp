#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcv/gauss.hpp"

using namespace qcv;

TEST_CASE("one-dimensional Gaussian moments follow the double-factorial rule") {
  const Rat b(1);
  CHECK(gaussian_moment({0}, b).coeff == 1);
  CHECK(gaussian_moment({1}, b).is_zero());
  CHECK(gaussian_moment({2}, b).coeff == frac(1, 2));
  CHECK(gaussian_moment({4}, b).coeff == frac(3, 4));
  CHECK(gaussian_moment({6}, b).coeff == frac(15, 8));
  CHECK(gaussian_moment({2, 2}, frac(1, 2)).coeff == 1);
  CHECK(gaussian_moment({3, 2}, b).is_zero());
  CHECK_THROWS(gaussian_moment({2}, Rat(0)));
}

TEST_CASE("exact integration matches the moment inner product") {
  const GroupModel m = build_group_model(1);
  const int nv = m.nvars();
  const Poly p = Poly::variable(nv, 0) * Poly::variable(nv, 0) +
                 Poly::variable(nv, 5) * Rat(3);
  const Poly q = Poly::variable(nv, 0) * Poly::variable(nv, 0) * Rat(2);
  const Rat b(2);
  const ExactIntegral direct = integrate_exact(m, GaussFn{p * q, b});
  CHECK(moment_inner(p, q, b) == direct.coeff);
}

TEST_CASE("mixed rates refuse to combine") {
  const ExactIntegral a{Rat(1), Rat(1), 7};
  const ExactIntegral b{Rat(1), Rat(2), 7};
  const ExactIntegral c{Rat(1), Rat(1), 5};
  CHECK_THROWS(a + b);
  CHECK_THROWS(a - c);
  CHECK((a + a).coeff == 2);
}

TEST_CASE("derivatives in the Gaussian ring keep the rate and obey Leibniz") {
  const GroupModel m = build_group_model(1);
  const GaussFn f{Poly::variable(m.nvars(), 1), Rat(1)};
  const GaussFn df = gauss_field_derivative(m, m.horizontal_frame[0], f);
  CHECK(df.a == f.a);
  const GaussFn f2 = gauss_product(f, f);
  CHECK(f2.a == Rat(2));
  const GaussFn df2 = gauss_field_derivative(m, m.horizontal_frame[0], f2);
  // d(f*f) = 2 f df
  CHECK(df2.p == f.p * df.p * Rat(2));
}

TEST_CASE("divergence integrals of Gaussian gradients vanish exactly") {
  const GroupModel m = build_group_model(1);
  const auto fam = gaussian_test_family(m, 6, 3, 99);
  for (const GaussFn& f : fam) {
    std::vector<GaussFn> sigma;
    for (std::size_t a = 0; a < m.hdim(); ++a)
      sigma.push_back(gauss_field_derivative(m, m.horizontal_frame[a], f));
    CHECK(verify_divergence(m, sigma).is_zero());
  }
}

TEST_CASE("both integral lemmas vanish exactly on the flat group") {
  const GroupModel m = build_group_model(1);
  const auto fam = gaussian_test_family(m, 6, 3, 123);
  for (const GaussFn& f : fam) {
    CHECK(verify_lemma_gr2_flat(m, f).is_zero());
    CHECK(verify_lemma_gr1_flat(m, f).is_zero());
  }
}

TEST_CASE("Laplacian-vs-Hessian energy ratio never exceeds (n+1)/n") {
  const GroupModel m = build_group_model(1);
  const auto fam = gaussian_test_family(m, 8, 3, 321);
  const Rat bound = frac(m.n + 1, m.n);
  bool any = false;
  for (const GaussFn& f : fam) {
    const auto hess_over_lap = verify_hessian_laplacian_bound(m, f);
    if (!hess_over_lap) continue;
    any = true;
    CHECK(1 / *hess_over_lap <= bound);
  }
  CHECK(any);
}

TEST_CASE("Monte Carlo integration is chunk-deterministic and unbiased") {
  const int dim = 3;
  const Rat b(1);
  auto integrand = [](std::span<const double> x) { return x[0] * x[0]; };
  const McEstimate one = mc_integrate(dim, b, integrand, 50000, 9, 1);
  const McEstimate three = mc_integrate(dim, b, integrand, 50000, 9, 3);
  CHECK(one.estimate == three.estimate);  // bit-identical across worker counts
  CHECK(one.std_error == three.std_error);
  // exact value of the x^2 moment at rate 1 is 1/2
  CHECK(std::abs(one.estimate - 0.5) <= 4.0 * one.std_error);
  CHECK_THROWS(mc_integrate(dim, b, integrand, 100, 9, 1));
}

TEST_CASE("MC cross-checks an exact group integral") {
  const GroupModel m = build_group_model(1);
  const auto fam = gaussian_test_family(m, 1, 2, 5);
  const GaussFn& f = fam[0];
  const Rat b2 = f.a * 2;
  const Rat exact = moment_inner(f.p, f.p, b2);
  const McEstimate est = mc_integrate(
      m.nvars(), b2,
      [&f](std::span<const double> x) {
        const double v = f.p.eval(x);
        return v * v;
      },
      100000, 77, 1);
  CHECK(std::abs(est.estimate - static_cast<double>(exact)) <= 3.0 * est.std_error);
}
