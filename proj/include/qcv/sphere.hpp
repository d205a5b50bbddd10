#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "qcv/matrix.hpp"
#include "qcv/poly.hpp"
#include "qcv/quat.hpp"

namespace qcv {

// Function on a neighborhood of the unit sphere in R^{4n+4}, given with its
// ambient gradient so first derivatives carry no finite-difference error.
struct AmbientFn {
  std::function<double(std::span<const double>)> value;
  std::function<void(std::span<const double>, std::span<double>)> gradient;
};

AmbientFn ambient_poly_fn(const Poly& p);
AmbientFn ambient_coordinate_fn(int dim, int index);

// Numerical model of the round 3-Sasakian sphere S^{4n+3} in R^{4n+4}.
// Reeb fields xi_s(x) = J_s x; horizontal space H_x = T_x S cap span{xi}^perp.
//
// Structural data of the qc structure: S = 2, T^0 = 0, U = 0,
// Ric = 4(n+2) g, and Riemannian scalar curvature (4n+2)(4n+3).
struct SphereModel {
  int n = 0;
  std::array<Mat<double>, 3> J;
  double fd_step = 1e-4;        // first-derivative central differences
  double geodesic_step = 1e-2;  // base step for extrapolated second derivatives

  int ambient_dim() const { return 4 * n + 4; }
  int hdim() const { return 4 * n; }

  static constexpr double kNormalizedScalarCurvature = 2.0;
  double k0() const { return 4.0 * (n + 2); }
  double ricci_coefficient() const { return 4.0 * (n + 2); }
  double riemannian_scalar() const { return (4.0 * n + 2) * (4.0 * n + 3); }
};

// Requires n >= 2: the eigenvalue and Hessian statements assume dimension
// 4n+3 > 7.  Samples the Reeb/horizontal invariants at random points.
SphereModel build_sphere_model(int n, Chirality chirality = kDefaultChirality);

std::vector<double> reeb_at(const SphereModel& m, std::span<const double> x, int s);  // s in 1..3

std::vector<double> random_unit_point(int dim, std::mt19937_64& rng);

// Orthonormal basis of H_x, built by greedy-pivot Gram-Schmidt on the
// horizontal projections of the ambient basis vectors.  The pivot order is
// recorded so the frame extends smoothly to nearby points.
struct HorizontalFrameAtPoint {
  std::vector<double> x;
  std::vector<std::vector<double>> vectors;  // 4n unit vectors
  std::vector<int> pivots;
};

HorizontalFrameAtPoint horizontal_frame_at(const SphereModel& m, std::span<const double> x);

// -sum over a full orthonormal tangent frame of d^2/dh^2 f(x cos h + v sin h)
// at h = 0 (positive Laplacian).
double riemannian_laplacian_at(const SphereModel& m, const AmbientFn& f,
                               std::span<const double> x);

// d^2/dh^2 f(x cos h + xi_s sin h) at h = 0 along the closed Reeb orbit.
double reeb_second_derivative(const SphereModel& m, const AmbientFn& f,
                              std::span<const double> x, int s);  // s in 1..3

// Positive sub-Laplacian, computed two independent ways:
//   route A: lap^g f + sum_s xi_s^2 f      (the Reeb fields are geodesic)
//   route B: -sum_a [e_a(e_a f) - df((nabla^g_{e_a} e_a)_H)]
// Disagreement beyond tolerance signals a convention or step-size error.
struct SubLaplacianValue {
  double route_a = 0.0;
  double route_b = 0.0;
  double disagreement() const;
};

SubLaplacianValue sub_laplacian_at(const SphereModel& m, const AmbientFn& f,
                                   std::span<const double> x);

// Entry (a,b) = e_a(e_b f) - df((nabla^g_{e_a} e_b)_H), with the frame
// extended to nearby points by projection in the recorded pivot order.  The
// Biquard and Levi-Civita connections agree on horizontal components of
// horizontal arguments, so this is the Biquard horizontal Hessian.
Mat<double> biquard_horizontal_hessian_at(const SphereModel& m, const AmbientFn& f,
                                          std::span<const double> x,
                                          const HorizontalFrameAtPoint* frame = nullptr);

// Max over random points of |lap x_A - eigenvalue * x_A|; the default claimed
// eigenvalue is 4n, the first positive one.
struct EigenfunctionReport {
  double max_residual = 0.0;
  std::uint64_t points = 0;
  double tolerance = 0.0;
  bool pass = false;
};

EigenfunctionReport verify_eigenfunction(const SphereModel& m, int coordinate,
                                         std::uint64_t samples, std::uint64_t seed,
                                         std::optional<double> eigenvalue = std::nullopt,
                                         double tol = 1e-4);

// Monte Carlo over uniform sphere samples for f = x_A of
//   int sum_s (xi_s f)^2 / int f^2   (expected 3),
//   int |grad_H f|^2   / int f^2     (expected 4n),
//   int |grad^g f|^2   / int f^2     (expected 4n+3).
// Chunked with per-chunk seeds: bit-identical for fixed (seed, N) regardless
// of worker count.
struct SphereRatios {
  double vertical_energy_ratio = 0.0;
  double rayleigh_quotient = 0.0;
  double riemannian_rayleigh = 0.0;
  std::uint64_t samples = 0;
};

SphereRatios sphere_ratios_mc(const SphereModel& m, int coordinate, std::uint64_t samples,
                              std::uint64_t seed, int workers = 1);

}  // namespace qcv
