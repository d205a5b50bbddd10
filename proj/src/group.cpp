#include "qcv/group.hpp"

#include <sstream>
#include <stdexcept>

namespace qcv {

std::array<SignedPermutation, 3> signed_permutations(const HypercomplexTriple& t) {
  std::array<SignedPermutation, 3> out;
  const std::size_t dim = t.dim();
  for (int s = 0; s < 3; ++s) {
    out[s].row.assign(dim, -1);
    out[s].sign.assign(dim, 0);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t r = 0; r < dim; ++r) {
        const Rat& v = t.I[s](r, a);
        if (v == 0) continue;
        if (out[s].row[a] != -1 || (v != 1 && v != -1))
          throw std::logic_error("I_s is not a signed permutation matrix");
        out[s].row[a] = static_cast<int>(r);
        out[s].sign[a] = v == 1 ? 1 : -1;
      }
      if (out[s].row[a] == -1) throw std::logic_error("I_s has a zero column");
    }
  }
  return out;
}

GroupModel build_group_model(int n, Chirality chirality) {
  if (n < 1) throw std::invalid_argument("build_group_model: n must be >= 1");
  GroupModel m;
  m.n = n;
  m.triple = make_hypercomplex_triple(n, chirality);
  const int nv = m.nvars();
  const std::size_t hd = m.hdim();

  for (std::size_t a = 0; a < hd; ++a) {
    PolyVectorField e(nv);
    e.coeffs[a] = Poly::constant(nv, 1);
    for (int s = 0; s < 3; ++s) {
      Poly c(nv);
      for (std::size_t b = 0; b < hd; ++b) {
        const Rat& w = m.triple.omega[s](a, b);
        if (w != 0) c = c + Poly::variable(nv, static_cast<int>(b)) * w;
      }
      e.coeffs[4 * n + s] = c;
    }
    m.horizontal_frame.push_back(std::move(e));
  }
  for (int s = 0; s < 3; ++s) {
    PolyVectorField xi(nv);
    xi.coeffs[4 * n + s] = Poly::constant(nv, 1);
    m.reeb[s] = std::move(xi);
  }

  SelfCheckReport rep = frame_structure_selfcheck(m);
  if (!rep.pass)
    throw std::logic_error("build_group_model: self-check failed: " + rep.first_violation);
  return m;
}

namespace {

// eta_s applied to a vector field; eta_s = dv_s - sum_{a,b} omega_s[a][b] x_b dx_a.
Poly eta_apply(const GroupModel& m, int s, const PolyVectorField& v) {
  const int nv = m.nvars();
  Poly r = v.coeffs[4 * m.n + s];
  for (std::size_t a = 0; a < m.hdim(); ++a) {
    if (v.coeffs[a].is_zero()) continue;
    Poly row(nv);
    for (std::size_t b = 0; b < m.hdim(); ++b) {
      const Rat& w = m.triple.omega[s](a, b);
      if (w != 0) row = row + Poly::variable(nv, static_cast<int>(b)) * w;
    }
    r = r - row * v.coeffs[a];
  }
  return r;
}

void fail(SelfCheckReport& rep, const std::string& what) {
  if (rep.pass) {
    rep.pass = false;
    rep.first_violation = what;
  }
}

}  // namespace

SelfCheckReport frame_structure_selfcheck(const GroupModel& m) {
  SelfCheckReport rep;
  const int nv = m.nvars();
  const std::size_t hd = m.hdim();
  if (m.horizontal_frame.size() != hd) {
    fail(rep, "frame has wrong number of fields");
    return rep;
  }

  // g-orthonormality in the standard frame: the horizontal coefficient block
  // must be exactly the identity, so pairwise products arrange themselves.
  for (std::size_t a = 0; a < hd && rep.pass; ++a)
    for (std::size_t b = 0; b < hd; ++b) {
      const Poly expect =
          a == b ? Poly::constant(nv, 1) : Poly(nv);
      if (!(m.horizontal_frame[a].coeffs[b] == expect)) {
        fail(rep, "horizontal coefficient block is not the identity");
        break;
      }
    }

  // eta_s(xi_k) = delta_{sk} and eta_s(e_a) = 0.
  for (int s = 0; s < 3 && rep.pass; ++s) {
    for (int k = 0; k < 3; ++k) {
      Poly v = eta_apply(m, s, m.reeb[k]);
      Poly expect = s == k ? Poly::constant(nv, 1) : Poly(nv);
      if (!(v == expect)) {
        std::ostringstream os;
        os << "eta_" << s + 1 << "(xi_" << k + 1 << ") != delta";
        fail(rep, os.str());
        break;
      }
    }
    for (std::size_t a = 0; a < hd && rep.pass; ++a)
      if (!eta_apply(m, s, m.horizontal_frame[a]).is_zero())
        fail(rep, "eta_s does not annihilate the horizontal frame");
  }

  // Center: [e_a, xi_s] = 0 and [xi_s, xi_k] = 0.
  for (int s = 0; s < 3 && rep.pass; ++s) {
    for (std::size_t a = 0; a < hd; ++a)
      if (!lie_bracket(m.horizontal_frame[a], m.reeb[s]).is_zero()) {
        fail(rep, "[e_a, xi_s] != 0");
        break;
      }
    for (int k = 0; k < 3; ++k)
      if (!lie_bracket(m.reeb[s], m.reeb[k]).is_zero()) {
        fail(rep, "[xi_s, xi_k] != 0");
        break;
      }
  }

  // Bracket/omega consistency: [e_a, e_b] purely vertical with
  // [e_a, e_b] = -2 sum_s omega_s(e_a, e_b) xi_s; this is the exact-bracket
  // form of the torsion relation and gives d eta_s(e_a,e_b) = 2 omega_s(e_a,e_b).
  for (std::size_t a = 0; a < hd && rep.pass; ++a)
    for (std::size_t b = 0; b < hd && rep.pass; ++b) {
      PolyVectorField br = lie_bracket(m.horizontal_frame[a], m.horizontal_frame[b]);
      for (std::size_t c = 0; c < hd; ++c)
        if (!br.coeffs[c].is_zero()) {
          fail(rep, "[e_a, e_b] has a horizontal component");
          break;
        }
      if (!rep.pass) break;
      PolyVectorField expect(nv);
      for (int s = 0; s < 3; ++s) {
        Rat w = m.triple.omega[s](a, b) * Rat(-2);
        for (int j = 0; j < nv; ++j)
          expect.coeffs[j] = expect.coeffs[j] + m.reeb[s].coeffs[j] * w;
      }
      for (int j = 0; j < nv; ++j)
        if (!(br.coeffs[j] == expect.coeffs[j])) {
          std::ostringstream os;
          os << "[e_" << a << ", e_" << b << "] != -2 sum omega_s xi_s";
          fail(rep, os.str());
          break;
        }
    }

  return rep;
}

Poly apply_field(const PolyVectorField& v, const Poly& f) { return v.apply(f); }

std::vector<Poly> horizontal_gradient(const GroupModel& m, const Poly& f) {
  std::vector<Poly> g;
  g.reserve(m.hdim());
  for (const auto& e : m.horizontal_frame) g.push_back(e.apply(f));
  return g;
}

std::vector<std::vector<Poly>> horizontal_hessian(const GroupModel& m, const Poly& f) {
  const std::size_t hd = m.hdim();
  std::vector<Poly> df;
  df.reserve(hd);
  for (const auto& e : m.horizontal_frame) df.push_back(e.apply(f));
  std::vector<std::vector<Poly>> h(hd);
  for (std::size_t a = 0; a < hd; ++a) {
    h[a].reserve(hd);
    for (std::size_t b = 0; b < hd; ++b) h[a].push_back(m.horizontal_frame[a].apply(df[b]));
  }
  return h;
}

Poly sub_laplacian(const GroupModel& m, const Poly& f) {
  Poly r(m.nvars());
  for (const auto& e : m.horizontal_frame) r = r - e.apply(e.apply(f));
  return r;
}

Poly vertical_derivative(const GroupModel& m, const Poly& f, int s) {
  if (s < 1 || s > 3) throw std::invalid_argument("vertical_derivative: s must be 1..3");
  return m.reeb[s - 1].apply(f);
}

std::array<Poly, 3> check_trace_identity(const GroupModel& m, const Poly& f) {
  const auto h = horizontal_hessian(m, f);
  const auto perms = signed_permutations(m.triple);
  std::array<Poly, 3> res{Poly(m.nvars()), Poly(m.nvars()), Poly(m.nvars())};
  for (int s = 0; s < 3; ++s) {
    Poly sum(m.nvars());
    for (std::size_t a = 0; a < m.hdim(); ++a) {
      // hess(e_a, I_s e_a) = sign * hess(e_a, e_row)
      sum = sum + h[a][perms[s].row[a]] * Rat(perms[s].sign[a]);
    }
    res[s] = sum + m.reeb[s].apply(f) * Rat(4 * m.n);
  }
  return res;
}

bool RicciResiduals::all_zero() const {
  for (const auto& p : horizontal)
    if (!p.is_zero()) return false;
  for (const auto& p : mixed)
    if (!p.is_zero()) return false;
  return true;
}

RicciResiduals check_ricci_identities(const GroupModel& m, const Poly& f) {
  RicciResiduals r;
  const std::size_t hd = m.hdim();
  const auto h = horizontal_hessian(m, f);
  std::array<Poly, 3> xif = {m.reeb[0].apply(f), m.reeb[1].apply(f), m.reeb[2].apply(f)};
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = a + 1; b < hd; ++b) {
      Poly res = h[a][b] - h[b][a];
      for (int s = 0; s < 3; ++s) res = res + xif[s] * (m.triple.omega[s](a, b) * Rat(2));
      r.horizontal.push_back(std::move(res));
    }
  for (std::size_t a = 0; a < hd; ++a)
    for (int s = 0; s < 3; ++s)
      r.mixed.push_back(m.horizontal_frame[a].apply(xif[s]) -
                        m.reeb[s].apply(m.horizontal_frame[a].apply(f)));
  return r;
}

Poly vertical_hessian_term(const GroupModel& m, const Poly& f) {
  const std::size_t hd = m.hdim();
  const auto perms = signed_permutations(m.triple);
  std::vector<Poly> df;
  df.reserve(hd);
  for (const auto& e : m.horizontal_frame) df.push_back(e.apply(f));
  Poly total(m.nvars());
  for (int s = 0; s < 3; ++s) {
    // hess(xi_s, I_s grad f) = sum_a (e_a f) * sign_a * xi_s(e_{row_a} f)
    for (std::size_t a = 0; a < hd; ++a) {
      Poly t = m.reeb[s].apply(df[perms[s].row[a]]);
      total = total + df[a] * t * Rat(perms[s].sign[a]);
    }
  }
  return total;
}

Poly check_bochner_pointwise(const GroupModel& m, const Poly& f) {
  const std::size_t hd = m.hdim();
  const auto grad = horizontal_gradient(m, f);
  Poly grad_sq(m.nvars());
  for (const auto& g : grad) grad_sq = grad_sq + g * g;

  const auto h = horizontal_hessian(m, f);
  Poly hess_sq(m.nvars());
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = 0; b < hd; ++b) hess_sq = hess_sq + h[a][b] * h[a][b];

  const Poly lapf = sub_laplacian(m, f);
  Poly grad_lap_term(m.nvars());
  for (std::size_t a = 0; a < hd; ++a)
    grad_lap_term = grad_lap_term + m.horizontal_frame[a].apply(lapf) * grad[a];

  Poly res = sub_laplacian(m, grad_sq) * frac(1, 2) + hess_sq - grad_lap_term +
             vertical_hessian_term(m, f) * Rat(4);
  return res;
}

}  // namespace qcv
