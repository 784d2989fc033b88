#include "casc/coadjoint.hpp"

#include <stdexcept>

#include "casc/matrix.hpp"

namespace casc {

LieElement lie_zero(const RootSystem& rs) {
  return LieElement{rvec(rs.num_pos()), rvec(rs.rank()), rvec(rs.num_pos())};
}

LieElement lie_embed(const RootSystem& rs, const NilVector& v) {
  LieElement x = lie_zero(rs);
  (v.lower ? x.lower : x.upper) = v.c;
  return x;
}

NilVector project_P(const RootSystem& rs, const LieElement& x) {
  (void)rs;
  return NilVector{x.lower, true};
}

namespace {

// [e_a, e_b] contribution for signed roots with coefficient c.
void add_root_bracket(const RootSystem& rs, SRoot a, SRoot b, const Rat& c, LieElement& out) {
  if (a.id == b.id && a.neg != b.neg) {
    // [e_phi, e_{-phi}] = h_phi
    Rat sign = a.neg ? Rat(-1) : Rat(1);
    const IntVec& h = rs.coroot(a.id);
    for (int i = 0; i < rs.rank(); ++i) out.cartan[i] += sign * c * Rat(h[i]);
    return;
  }
  auto s = rs.root_sum(a, b);
  if (!s) return;
  Rat v = c * Rat(rs.chevalley_N(a, b));
  (s->neg ? out.lower[s->id] : out.upper[s->id]) += v;
}

}  // namespace

LieElement bracket(const RootSystem& rs, const LieElement& x, const LieElement& y) {
  LieElement out = lie_zero(rs);
  int n = rs.num_pos();

  for (int i = 0; i < n; ++i) {
    SRoot xi_u{i, false}, xi_l{i, true};
    if (x.upper[i] != 0) {
      for (int j = 0; j < n; ++j) {
        if (y.upper[j] != 0) add_root_bracket(rs, xi_u, SRoot{j, false}, x.upper[i] * y.upper[j], out);
        if (y.lower[j] != 0) add_root_bracket(rs, xi_u, SRoot{j, true}, x.upper[i] * y.lower[j], out);
      }
    }
    if (x.lower[i] != 0) {
      for (int j = 0; j < n; ++j) {
        if (y.upper[j] != 0) add_root_bracket(rs, xi_l, SRoot{j, false}, x.lower[i] * y.upper[j], out);
        if (y.lower[j] != 0) add_root_bracket(rs, xi_l, SRoot{j, true}, x.lower[i] * y.lower[j], out);
      }
    }
  }

  // [h, e_phi] = phi(h) e_phi, [h, e_{-phi}] = -phi(h) e_{-phi}
  for (int j = 0; j < n; ++j) {
    if (y.upper[j] != 0) out.upper[j] += rs.root_on_cartan(SRoot{j, false}, x.cartan) * y.upper[j];
    if (y.lower[j] != 0) out.lower[j] -= rs.root_on_cartan(SRoot{j, false}, x.cartan) * y.lower[j];
    if (x.upper[j] != 0) out.upper[j] -= rs.root_on_cartan(SRoot{j, false}, y.cartan) * x.upper[j];
    if (x.lower[j] != 0) out.lower[j] += rs.root_on_cartan(SRoot{j, false}, y.cartan) * x.lower[j];
  }
  return out;
}

NilVector coadjoint_action(const RootSystem& rs, const LieElement& x, const NilVector& v) {
  if (!is_zero(x.lower)) throw std::invalid_argument("coadjoint action expects x in b");
  if (!v.lower) throw std::invalid_argument("coadjoint action expects v in n_-");
  return project_P(rs, bracket(rs, x, lie_embed(rs, v)));
}

NilVector coadjoint_group_action(const RootSystem& rs, const std::vector<NilVector>& xs,
                                 NilVector v) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    if (it->lower) throw std::invalid_argument("group action expects factors in n");
    LieElement x = lie_embed(rs, *it);
    NilVector acc = v, term = v;
    long j = 1;
    while (!term.zero()) {
      term = coadjoint_action(rs, x, term);
      for (auto& c : term.c) c /= j;
      acc.c = acc.c + term.c;
      if (++j > rs.num_pos() + 2) throw std::logic_error("coad exponential did not terminate");
    }
    v = acc;
  }
  return v;
}

namespace {

Rat character(const RootSystem& rs, const RatVec& t, int pos_id) {
  Rat ch(1);
  for (int i = 0; i < rs.rank(); ++i) {
    int e = rs.pos_root(pos_id)[i];
    for (int k = 0; k < e; ++k) ch *= t[i];
  }
  return ch;
}

}  // namespace

NilVector torus_action(const RootSystem& rs, const RatVec& t, const NilVector& v) {
  if (!v.lower) throw std::invalid_argument("torus action expects v in n_-");
  NilVector out = v;
  for (int p = 0; p < rs.num_pos(); ++p)
    if (out.c[p] != 0) out.c[p] /= character(rs, t, p);
  return out;
}

NilVector torus_adjoint(const RootSystem& rs, const RatVec& t, const NilVector& x) {
  if (x.lower) throw std::invalid_argument("torus adjoint expects x in n");
  NilVector out = x;
  for (int p = 0; p < rs.num_pos(); ++p)
    if (out.c[p] != 0) out.c[p] *= character(rs, t, p);
  return out;
}

std::vector<NilVector> isotropy_basis(const RootSystem& rs, const NilVector& tau) {
  int n = rs.num_pos();
  QMat m(n, n);
  for (int k = 0; k < n; ++k) {
    NilVector ek = nil_zero(rs, false);
    ek.c[k] = 1;
    NilVector img = coadjoint_action(rs, lie_embed(rs, ek), tau);
    for (int i = 0; i < n; ++i) m(i, k) = img.c[i];
  }
  std::vector<NilVector> basis;
  for (auto& v : nullspace(m)) basis.push_back(NilVector{std::move(v), false});
  return basis;
}

int orbit_dimension(const RootSystem& rs, const NilVector& tau) {
  return rs.num_pos() - static_cast<int>(isotropy_basis(rs, tau).size());
}

int b_tangent_dimension(const RootSystem& rs, const NilVector& tau) {
  int n = rs.num_pos();
  QMat m(n, n + rs.rank());
  for (int k = 0; k < n; ++k) {
    NilVector ek = nil_zero(rs, false);
    ek.c[k] = 1;
    NilVector img = coadjoint_action(rs, lie_embed(rs, ek), tau);
    for (int i = 0; i < n; ++i) m(i, k) = img.c[i];
  }
  for (int k = 0; k < rs.rank(); ++k) {
    LieElement h = lie_zero(rs);
    h.cartan[k] = 1;
    NilVector img = coadjoint_action(rs, h, tau);
    for (int i = 0; i < n; ++i) m(i, n + k) = img.c[i];
  }
  return static_cast<int>(m.rank());
}

NilVector cascade_point(const RootSystem& rs, const Cascade& c, const RatVec& a) {
  NilVector tau = nil_zero(rs, true);
  for (int k = 0; k < c.m(); ++k) tau.c[c.nodes[k].root] = a[k];
  return tau;
}

}  // namespace casc
