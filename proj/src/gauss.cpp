#include "qcv/gauss.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace qcv {

Poly rho_poly(int n) {
  const int nv = 4 * n + 3;
  Poly r(nv);
  for (int i = 0; i < nv; ++i) {
    Poly::Exponents e(nv, 0);
    e[i] = 2;
    r.add_term(e, Rat(1));
  }
  return r;
}

GaussFn gauss_field_derivative(const GroupModel& m, const PolyVectorField& v, const GaussFn& f) {
  // v(p e^{-a rho}) = (v(p) - a p v(rho)) e^{-a rho}
  const Poly rho = rho_poly(m.n);
  return GaussFn{v.apply(f.p) - f.p * v.apply(rho) * f.a, f.a};
}

GaussFn gauss_product(const GaussFn& f, const GaussFn& g) {
  return GaussFn{f.p * g.p, f.a + g.a};
}

namespace {

void require_same_units(const ExactIntegral& a, const ExactIntegral& b) {
  if (a.b != b.b || a.dim != b.dim)
    throw std::invalid_argument("ExactIntegral: mixed rates or dimensions");
}

// Moment ratio table: mom[k] = (k-1)!!/(2b)^{k/2} for even k, 0 for odd.
std::vector<Rat> moment_table(unsigned maxdeg, const Rat& b) {
  std::vector<Rat> mom(maxdeg + 1, Rat(0));
  const Rat twob = b * 2;
  Rat denom = 1;
  for (unsigned k = 0; k <= maxdeg; k += 2) {
    mom[k] = Rat(odd_double_factorial(k)) / denom;
    denom *= twob;
  }
  return mom;
}

}  // namespace

ExactIntegral ExactIntegral::operator+(const ExactIntegral& o) const {
  require_same_units(*this, o);
  return {coeff + o.coeff, b, dim};
}
ExactIntegral ExactIntegral::operator-(const ExactIntegral& o) const {
  require_same_units(*this, o);
  return {coeff - o.coeff, b, dim};
}
ExactIntegral ExactIntegral::operator*(const Rat& s) const { return {coeff * s, b, dim}; }

ExactIntegral gaussian_moment(const std::vector<unsigned>& mono, const Rat& b) {
  if (b <= 0) throw std::invalid_argument("gaussian_moment: rate must be positive");
  unsigned maxdeg = 0;
  for (unsigned k : mono) maxdeg = std::max(maxdeg, k);
  const auto mom = moment_table(maxdeg, b);
  Rat c = 1;
  for (unsigned k : mono) {
    if (k % 2 == 1) return {Rat(0), b, static_cast<int>(mono.size())};
    c *= mom[k];
  }
  return {c, b, static_cast<int>(mono.size())};
}

ExactIntegral integrate_exact(const GroupModel& m, const GaussFn& q) {
  if (q.a <= 0) throw std::invalid_argument("integrate_exact: rate must be positive");
  const int nv = m.nvars();
  unsigned maxdeg = 0;
  for (const auto& [e, c] : q.p.terms())
    for (int i = 0; i < nv; ++i) maxdeg = std::max<unsigned>(maxdeg, e[i]);
  const auto mom = moment_table(maxdeg, q.a);
  Rat total = 0;
  for (const auto& [e, c] : q.p.terms()) {
    bool odd = false;
    for (int i = 0; i < nv && !odd; ++i) odd = e[i] % 2 == 1;
    if (odd) continue;
    Rat t = c;
    for (int i = 0; i < nv; ++i)
      if (e[i] > 0) t *= mom[e[i]];
    total += t;
  }
  return {total, q.a, nv};
}

Rat moment_inner(const Poly& P, const Poly& Q, const Rat& b) {
  if (P.nvars() != Q.nvars()) throw std::invalid_argument("moment_inner: nvars mismatch");
  const int nv = P.nvars();
  unsigned maxdeg = 0;
  for (const auto& [e, c] : P.terms())
    for (int i = 0; i < nv; ++i) maxdeg = std::max<unsigned>(maxdeg, e[i]);
  unsigned maxq = 0;
  for (const auto& [e, c] : Q.terms())
    for (int i = 0; i < nv; ++i) maxq = std::max<unsigned>(maxq, e[i]);
  const auto mom = moment_table(maxdeg + maxq, b);

  auto parity_mask = [nv](const Poly::Exponents& e) {
    std::uint64_t mask = 0;
    for (int i = 0; i < nv; ++i) mask |= static_cast<std::uint64_t>(e[i] & 1u) << i;
    return mask;
  };

  // Only term pairs with identical parity patterns have even products.
  std::unordered_map<std::uint64_t, std::vector<const std::pair<const Poly::Exponents, Rat>*>>
      buckets;
  for (const auto& term : Q.terms()) buckets[parity_mask(term.first)].push_back(&term);

  Rat total = 0;
  for (const auto& [ep, cp] : P.terms()) {
    auto it = buckets.find(parity_mask(ep));
    if (it == buckets.end()) continue;
    for (const auto* qt : it->second) {
      Rat t = cp * qt->second;
      for (int i = 0; i < nv; ++i) {
        const unsigned k = ep[i] + qt->first[i];
        if (k > 0) t *= mom[k];
      }
      total += t;
    }
  }
  return total;
}

ExactIntegral verify_divergence(const GroupModel& m, const std::vector<GaussFn>& sigma) {
  if (sigma.size() != m.hdim())
    throw std::invalid_argument("verify_divergence: sigma must have 4n components");
  const Rat rate = sigma[0].a;
  for (const auto& s : sigma)
    if (s.a != rate) throw std::invalid_argument("verify_divergence: mixed rates");
  // nabla* sigma = -sum_a e_a(sigma_a)
  Poly div(m.nvars());
  for (std::size_t a = 0; a < m.hdim(); ++a)
    div = div - gauss_field_derivative(m, m.horizontal_frame[a], sigma[a]).p;
  return integrate_exact(m, GaussFn{div, rate});
}

namespace {

struct GaussHessian {
  std::vector<GaussFn> grad;                 // e_a f
  std::array<GaussFn, 3> vert;               // xi_s f
  std::vector<std::vector<Poly>> hess;       // e_a(e_b f) poly parts
  std::array<std::vector<Poly>, 3> vert_hess;  // xi_s(e_b f) poly parts
};

GaussHessian gauss_hessian(const GroupModel& m, const GaussFn& f) {
  GaussHessian r;
  const std::size_t hd = m.hdim();
  r.grad.reserve(hd);
  for (std::size_t a = 0; a < hd; ++a)
    r.grad.push_back(gauss_field_derivative(m, m.horizontal_frame[a], f));
  for (int s = 0; s < 3; ++s) r.vert[s] = gauss_field_derivative(m, m.reeb[s], f);
  r.hess.resize(hd);
  for (std::size_t a = 0; a < hd; ++a) {
    r.hess[a].reserve(hd);
    for (std::size_t b = 0; b < hd; ++b)
      r.hess[a].push_back(gauss_field_derivative(m, m.horizontal_frame[a], r.grad[b]).p);
  }
  for (int s = 0; s < 3; ++s) {
    r.vert_hess[s].reserve(hd);
    for (std::size_t b = 0; b < hd; ++b)
      r.vert_hess[s].push_back(gauss_field_derivative(m, m.reeb[s], r.grad[b]).p);
  }
  return r;
}

// int sum_s hess f(xi_s, I_s grad f), in coefficient units at rate 2a.
Rat vertical_term_coeff(const GroupModel& m, const GaussHessian& gh, const Rat& b2) {
  const auto perms = signed_permutations(m.triple);
  Rat total = 0;
  for (int s = 0; s < 3; ++s)
    for (std::size_t a = 0; a < m.hdim(); ++a) {
      Rat t = moment_inner(gh.grad[a].p, gh.vert_hess[s][perms[s].row[a]], b2);
      total += Rat(perms[s].sign[a]) * t;
    }
  return total;
}

}  // namespace

ExactIntegral verify_lemma_gr2_flat(const GroupModel& m, const GaussFn& f) {
  const Rat b2 = f.a * 2;
  const auto gh = gauss_hessian(m, f);
  Rat lhs = vertical_term_coeff(m, gh, b2);
  Rat rhs = 0;
  for (int s = 0; s < 3; ++s) rhs += moment_inner(gh.vert[s].p, gh.vert[s].p, b2);
  rhs *= Rat(-4 * m.n);
  return {lhs - rhs, b2, m.nvars()};
}

ExactIntegral verify_lemma_gr1_flat(const GroupModel& m, const GaussFn& f) {
  const Rat b2 = f.a * 2;
  const auto gh = gauss_hessian(m, f);
  const auto perms = signed_permutations(m.triple);
  const std::size_t hd = m.hdim();

  // [3]- and [-1]-parts of the poly-valued Hessian, pointwise.
  std::vector<std::vector<Poly>> h3(hd, std::vector<Poly>(hd, Poly(m.nvars())));
  Rat norm3 = 0, normm1 = 0;
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = 0; b < hd; ++b) {
      Poly sum = gh.hess[a][b];
      for (int s = 0; s < 3; ++s) {
        const Rat sg = Rat(perms[s].sign[a] * perms[s].sign[b]);
        sum = sum + gh.hess[perms[s].row[a]][perms[s].row[b]] * sg;
      }
      h3[a][b] = sum * frac(1, 4);
      Poly hm1 = gh.hess[a][b] - h3[a][b];
      norm3 += moment_inner(h3[a][b], h3[a][b], b2);
      normm1 += moment_inner(hm1, hm1, b2);
    }

  Rat lhs = vertical_term_coeff(m, gh, b2);
  Rat rhs = frac(3, 4 * m.n) * norm3 - frac(1, 4 * m.n) * normm1;
  return {lhs - rhs, b2, m.nvars()};
}

std::optional<Rat> verify_hessian_laplacian_bound(const GroupModel& m, const GaussFn& f) {
  const Rat b2 = f.a * 2;
  const auto gh = gauss_hessian(m, f);
  const std::size_t hd = m.hdim();
  Poly lap(m.nvars());
  for (std::size_t a = 0; a < hd; ++a) lap = lap - gh.hess[a][a];
  const Rat lap_sq = moment_inner(lap, lap, b2);
  if (lap_sq == 0) return std::nullopt;
  Rat hess_sq = 0;
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = 0; b < hd; ++b)
      hess_sq += moment_inner(gh.hess[a][b], gh.hess[a][b], b2);
  return hess_sq / lap_sq;
}

std::vector<GaussFn> gaussian_test_family(const GroupModel& m, int count, int maxdeg,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::array<Rat, 3> rates = {frac(1, 2), Rat(1), Rat(2)};
  std::vector<GaussFn> fam;
  fam.reserve(count);
  for (int i = 0; i < count; ++i) {
    Poly p = random_poly(rng, m.nvars(), maxdeg, 6);
    if (p.is_zero()) p = Poly::constant(m.nvars(), 1);
    fam.push_back(GaussFn{std::move(p), rates[i % 3]});
  }
  return fam;
}

McEstimate mc_integrate(int dim, const Rat& b,
                        const std::function<double(std::span<const double>)>& poly_part,
                        std::uint64_t n_samples, std::uint64_t seed, int workers) {
  if (n_samples < 10000) throw std::invalid_argument("mc_integrate: need at least 10^4 samples");
  if (workers < 1) workers = 1;

  const double sigma = 1.0 / std::sqrt(2.0 * static_cast<double>(b));
  constexpr std::uint64_t kChunk = 8192;
  const std::uint64_t n_chunks = (n_samples + kChunk - 1) / kChunk;

  struct ChunkStat {
    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t count = 0;
  };
  std::vector<ChunkStat> stats(n_chunks);

  auto run_chunk = [&](std::uint64_t c) {
    // splitmix-style per-chunk seed: identical regardless of worker layout
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (c + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    std::mt19937_64 rng(z ^ (z >> 31));
    std::normal_distribution<double> normal(0.0, sigma);
    std::vector<double> x(dim);
    ChunkStat st;
    const std::uint64_t lo = c * kChunk;
    const std::uint64_t hi = std::min(n_samples, lo + kChunk);
    for (std::uint64_t i = lo; i < hi; ++i) {
      for (int j = 0; j < dim; ++j) x[j] = normal(rng);
      const double v = poly_part(x);
      st.sum += v;
      st.sum_sq += v * v;
      ++st.count;
    }
    stats[c] = st;
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

  // Deterministic in-order reduction.
  double sum = 0.0, sum_sq = 0.0;
  std::uint64_t count = 0;
  for (const auto& st : stats) {
    sum += st.sum;
    sum_sq += st.sum_sq;
    count += st.count;
  }
  const double mean = sum / static_cast<double>(count);
  const double var =
      std::max(0.0, sum_sq / static_cast<double>(count) - mean * mean);
  McEstimate e;
  e.estimate = mean;
  e.std_error = std::sqrt(var / static_cast<double>(count));
  e.samples = count;
  return e;
}

}  // namespace qcv
