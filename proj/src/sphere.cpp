#include "qcv/sphere.hpp"

#include <atomic>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qcv {

namespace {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vec matvec(const Mat<double>& m, std::span<const double> x) {
  Vec r(m.rows(), 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

void axpy(Vec& y, double a, std::span<const double> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

Vec normalized(Vec v) {
  const double nr = norm(v);
  for (double& c : v) c /= nr;
  return v;
}

void require_unit(std::span<const double> x) {
  if (std::abs(norm(x) - 1.0) > 1e-12)
    throw std::invalid_argument("sphere: base point is not a unit vector");
}

// Projection of v onto H_x = {x, xi_1, xi_2, xi_3}^perp, in place.
void project_horizontal(const SphereModel&, std::span<const double> x,
                        const std::array<Vec, 3>& xi, Vec& v) {
  axpy(v, -dot(v, x), x);
  for (int s = 0; s < 3; ++s) axpy(v, -dot(v, xi[s]), xi[s]);
}

std::array<Vec, 3> reeb_triple(const SphereModel& m, std::span<const double> x) {
  return {matvec(m.J[0], x), matvec(m.J[1], x), matvec(m.J[2], x)};
}

// Gram-Schmidt on the horizontal projections of ambient basis vectors taken
// in the given pivot order.  Used to extend a frame to nearby points.
std::vector<Vec> frame_in_pivot_order(const SphereModel& m, std::span<const double> x,
                                      const std::vector<int>& pivots) {
  const int dim = m.ambient_dim();
  const auto xi = reeb_triple(m, x);
  std::vector<Vec> frame;
  frame.reserve(pivots.size());
  for (int p : pivots) {
    Vec v(dim, 0.0);
    v[p] = 1.0;
    project_horizontal(m, x, xi, v);
    for (const Vec& u : frame) axpy(v, -dot(v, u), u);
    const double nr = norm(v);
    if (nr < 1e-6) throw std::runtime_error("horizontal frame: near-singular pivot");
    for (double& c : v) c /= nr;
    frame.push_back(std::move(v));
  }
  return frame;
}

// Centered second derivative of h -> f(x cos h + v sin h) at 0, with one
// Richardson extrapolation step to kill the O(h^2) truncation term.
double circle_second_derivative(const AmbientFn& f, std::span<const double> x,
                                std::span<const double> v, double h) {
  const int dim = static_cast<int>(x.size());
  Vec y(dim);
  const double f0 = f.value(x);
  auto d2 = [&](double step) {
    const double c = std::cos(step), s = std::sin(step);
    for (int i = 0; i < dim; ++i) y[i] = c * x[i] + s * v[i];
    const double fp = f.value(y);
    for (int i = 0; i < dim; ++i) y[i] = c * x[i] - s * v[i];
    const double fm = f.value(y);
    return (fp - 2.0 * f0 + fm) / (step * step);
  };
  return (4.0 * d2(h / 2) - d2(h)) / 3.0;
}

std::uint64_t splitmix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

AmbientFn ambient_poly_fn(const Poly& p) {
  const int nv = p.nvars();
  auto grads = std::make_shared<std::vector<Poly>>();
  grads->reserve(nv);
  for (int i = 0; i < nv; ++i) grads->push_back(p.derivative(i));
  AmbientFn f;
  f.value = [p](std::span<const double> x) { return p.eval(x); };
  f.gradient = [grads, nv](std::span<const double> x, std::span<double> g) {
    for (int i = 0; i < nv; ++i) g[i] = (*grads)[i].eval(x);
  };
  return f;
}

AmbientFn ambient_coordinate_fn(int dim, int index) {
  if (index < 0 || index >= dim)
    throw std::invalid_argument("ambient_coordinate_fn: index out of range");
  AmbientFn f;
  f.value = [index](std::span<const double> x) { return x[index]; };
  f.gradient = [dim, index](std::span<const double>, std::span<double> g) {
    for (int i = 0; i < dim; ++i) g[i] = 0.0;
    g[index] = 1.0;
  };
  return f;
}

std::vector<double> random_unit_point(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vec x(dim);
  for (double& c : x) c = normal(rng);
  return normalized(std::move(x));
}

std::vector<double> reeb_at(const SphereModel& m, std::span<const double> x, int s) {
  if (s < 1 || s > 3) throw std::invalid_argument("reeb_at: s must be 1..3");
  return matvec(m.J[s - 1], x);
}

SphereModel build_sphere_model(int n, Chirality chirality) {
  if (n < 2)
    throw std::invalid_argument(
        "build_sphere_model: n must be >= 2 (the statements verified here "
        "assume dimension 4n+3 > 7)");
  SphereModel m;
  m.n = n;
  const HypercomplexTriple t = make_hypercomplex_triple(n + 1, chirality);
  for (int s = 0; s < 3; ++s) m.J[s] = to_double(t.I[s]);

  // Sampled invariants: the Reeb fields are unit, tangent, and mutually
  // orthogonal; the horizontal space has rank exactly 4n.
  std::mt19937_64 rng(0x5eedULL);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec x = random_unit_point(m.ambient_dim(), rng);
    const auto xi = reeb_triple(m, x);
    for (int s = 0; s < 3; ++s) {
      if (std::abs(norm(xi[s]) - 1.0) > 1e-12)
        throw std::logic_error("build_sphere_model: |xi_s| != 1");
      if (std::abs(dot(xi[s], x)) > 1e-12)
        throw std::logic_error("build_sphere_model: xi_s not tangent");
      for (int k = s + 1; k < 3; ++k)
        if (std::abs(dot(xi[s], xi[k])) > 1e-12)
          throw std::logic_error("build_sphere_model: xi_s not orthogonal to xi_k");
    }
    if (trial < 10) {
      const auto fr = horizontal_frame_at(m, x);
      if (static_cast<int>(fr.vectors.size()) != m.hdim())
        throw std::logic_error("build_sphere_model: horizontal rank != 4n");
    }
  }
  return m;
}

HorizontalFrameAtPoint horizontal_frame_at(const SphereModel& m, std::span<const double> x) {
  require_unit(x);
  const int dim = m.ambient_dim();
  const auto xi = reeb_triple(m, x);

  // Greedy pivoting: keep orthogonalizing the projected ambient basis and
  // take the largest residual at each step.
  std::vector<Vec> cand(dim);
  for (int i = 0; i < dim; ++i) {
    cand[i].assign(dim, 0.0);
    cand[i][i] = 1.0;
    project_horizontal(m, x, xi, cand[i]);
  }
  HorizontalFrameAtPoint fr;
  fr.x.assign(x.begin(), x.end());
  std::vector<bool> used(dim, false);
  for (int step = 0; step < m.hdim(); ++step) {
    int best = -1;
    double best_norm = 0.0;
    for (int i = 0; i < dim; ++i) {
      if (used[i]) continue;
      const double nr = norm(cand[i]);
      if (nr > best_norm) {
        best_norm = nr;
        best = i;
      }
    }
    if (best < 0 || best_norm < 1e-6)
      throw std::runtime_error("horizontal_frame_at: near-singular pivot");
    used[best] = true;
    Vec u = cand[best];
    for (double& c : u) c /= best_norm;
    for (int i = 0; i < dim; ++i)
      if (!used[i]) axpy(cand[i], -dot(cand[i], u), u);
    fr.pivots.push_back(best);
    fr.vectors.push_back(std::move(u));
  }
  return fr;
}

double riemannian_laplacian_at(const SphereModel& m, const AmbientFn& f,
                               std::span<const double> x) {
  require_unit(x);
  const auto fr = horizontal_frame_at(m, x);
  const auto xi = reeb_triple(m, x);
  double total = 0.0;
  for (const Vec& v : fr.vectors) total += circle_second_derivative(f, x, v, m.geodesic_step);
  for (int s = 0; s < 3; ++s) total += circle_second_derivative(f, x, xi[s], m.geodesic_step);
  return -total;
}

double reeb_second_derivative(const SphereModel& m, const AmbientFn& f,
                              std::span<const double> x, int s) {
  require_unit(x);
  const Vec xi = reeb_at(m, x, s);
  return circle_second_derivative(f, x, xi, m.geodesic_step);
}

double SubLaplacianValue::disagreement() const { return std::abs(route_a - route_b); }

SubLaplacianValue sub_laplacian_at(const SphereModel& m, const AmbientFn& f,
                                   std::span<const double> x) {
  SubLaplacianValue v;
  double vertical = 0.0;
  for (int s = 1; s <= 3; ++s) vertical += reeb_second_derivative(m, f, x, s);
  v.route_a = riemannian_laplacian_at(m, f, x) + vertical;
  v.route_b = -biquard_horizontal_hessian_at(m, f, x).trace();
  return v;
}

Mat<double> biquard_horizontal_hessian_at(const SphereModel& m, const AmbientFn& f,
                                          std::span<const double> x,
                                          const HorizontalFrameAtPoint* frame) {
  require_unit(x);
  HorizontalFrameAtPoint local;
  if (!frame) {
    local = horizontal_frame_at(m, x);
    frame = &local;
  }
  const int dim = m.ambient_dim();
  const int hd = m.hdim();
  const auto xi = reeb_triple(m, x);
  Vec grad0(dim);
  f.gradient(x, grad0);

  const double h = m.fd_step;
  Mat<double> out(hd, hd);
  Vec y(dim), grad(dim), w(dim);
  for (int a = 0; a < hd; ++a) {
    const Vec& va = frame->vectors[a];

    for (int i = 0; i < dim; ++i) y[i] = x[i] + h * va[i];
    const Vec yp = normalized(y);
    const auto ep = frame_in_pivot_order(m, yp, frame->pivots);
    Vec gp(dim);
    f.gradient(yp, gp);

    for (int i = 0; i < dim; ++i) y[i] = x[i] - h * va[i];
    const Vec ym = normalized(y);
    const auto em = frame_in_pivot_order(m, ym, frame->pivots);
    Vec gm(dim);
    f.gradient(ym, gm);

    for (int b = 0; b < hd; ++b) {
      // e_a(e_b f): derivative of the extended-frame directional derivative.
      const double d_ebf = (dot(ep[b], gp) - dot(em[b], gm)) / (2.0 * h);
      // (nabla^g_{e_a} e_b)_H: horizontal part of the frame-field derivative.
      for (int i = 0; i < dim; ++i) w[i] = (ep[b][i] - em[b][i]) / (2.0 * h);
      project_horizontal(m, x, xi, w);
      out(a, b) = d_ebf - dot(grad0, w);
    }
  }
  return out;
}

EigenfunctionReport verify_eigenfunction(const SphereModel& m, int coordinate,
                                         std::uint64_t samples, std::uint64_t seed,
                                         std::optional<double> eigenvalue, double tol) {
  if (coordinate < 0 || coordinate >= m.ambient_dim())
    throw std::invalid_argument("verify_eigenfunction: coordinate out of range");
  const double lam = eigenvalue.value_or(4.0 * m.n);
  const AmbientFn f = ambient_coordinate_fn(m.ambient_dim(), coordinate);
  std::mt19937_64 rng(seed);
  EigenfunctionReport rep;
  rep.points = samples;
  rep.tolerance = tol;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Vec x = random_unit_point(m.ambient_dim(), rng);
    const SubLaplacianValue lap = sub_laplacian_at(m, f, x);
    const double res = std::abs(lap.route_b - lam * x[coordinate]);
    rep.max_residual = std::max(rep.max_residual, res);
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

SphereRatios sphere_ratios_mc(const SphereModel& m, int coordinate, std::uint64_t samples,
                              std::uint64_t seed, int workers) {
  if (samples < 100000)
    throw std::invalid_argument("sphere_ratios_mc: need at least 10^5 samples");
  if (coordinate < 0 || coordinate >= m.ambient_dim())
    throw std::invalid_argument("sphere_ratios_mc: coordinate out of range");
  if (workers < 1) workers = 1;

  const int dim = m.ambient_dim();
  constexpr std::uint64_t kChunk = 8192;
  const std::uint64_t n_chunks = (samples + kChunk - 1) / kChunk;

  struct ChunkSums {
    double f_sq = 0.0, vertical = 0.0, riemannian = 0.0;
  };
  std::vector<ChunkSums> sums(n_chunks);

  auto run_chunk = [&](std::uint64_t c) {
    std::mt19937_64 rng(splitmix(seed, c));
    std::normal_distribution<double> normal(0.0, 1.0);
    Vec x(dim);
    ChunkSums cs;
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min(samples, lo + kChunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      for (double& v : x) v = normal(rng);
      const double nr = norm(x);
      for (double& v : x) v /= nr;
      const double fA = x[coordinate];
      // grad^g x_A = e_A - x_A x; xi_s x_A = (J_s x)_A.
      double vert = 0.0;
      for (int s = 0; s < 3; ++s) {
        double xs = 0.0;
        for (int j = 0; j < dim; ++j) xs += m.J[s](coordinate, j) * x[j];
        vert += xs * xs;
      }
      cs.f_sq += fA * fA;
      cs.vertical += vert;
      cs.riemannian += 1.0 - fA * fA;
    }
    sums[c] = cs;
  };

  if (workers == 1) {
    for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
          run_chunk(c);
      });
    for (auto& t : pool) t.join();
  }

  ChunkSums total;
  for (const auto& cs : sums) {
    total.f_sq += cs.f_sq;
    total.vertical += cs.vertical;
    total.riemannian += cs.riemannian;
  }
  SphereRatios r;
  r.samples = samples;
  r.vertical_energy_ratio = total.vertical / total.f_sq;
  r.riemannian_rayleigh = total.riemannian / total.f_sq;
  r.rayleigh_quotient = (total.riemannian - total.vertical) / total.f_sq;
  return r;
}

}  // namespace qcv
