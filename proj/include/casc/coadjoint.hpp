#pragma once

#include <vector>

#include "casc/cascade.hpp"
#include "casc/rootsystem.hpp"

namespace casc {

// Element of n_- (lower = true, sum c_phi e_{-phi}) or of n (lower = false,
// sum c_phi e_phi), coefficients indexed by positive roots.
struct NilVector {
  RatVec c;
  bool lower = true;

  bool operator==(const NilVector& o) const { return lower == o.lower && c == o.c; }
  bool zero() const { return is_zero(c); }
};

inline NilVector nil_zero(const RootSystem& rs, bool lower = true) {
  return NilVector{rvec(rs.num_pos()), lower};
}

// General element of g over the Chevalley basis: n_- part, Cartan part over
// the simple coroots h_i, n part.
struct LieElement {
  RatVec lower, cartan, upper;
};

LieElement lie_zero(const RootSystem& rs);
LieElement lie_embed(const RootSystem& rs, const NilVector& v);
LieElement bracket(const RootSystem& rs, const LieElement& x, const LieElement& y);

// The n_- component along b = h + n.
NilVector project_P(const RootSystem& rs, const LieElement& x);

// P([x, v]) for x in b (x.lower must vanish) and v in n_-.
NilVector coadjoint_action(const RootSystem& rs, const LieElement& x, const NilVector& v);

// Coad(exp x_1 ... exp x_k) v with each x in n; the exponential series
// terminates because coad x lowers height.
NilVector coadjoint_group_action(const RootSystem& rs, const std::vector<NilVector>& xs,
                                 NilVector v);

// t in H given by nonzero values t_i at the simple roots: e_{-phi} scales by
// prod t_i^{-n_i(phi)}.
NilVector torus_action(const RootSystem& rs, const RatVec& t, const NilVector& v);

// Ad(t) on n: e_phi scales by prod t_i^{n_i(phi)}.
NilVector torus_adjoint(const RootSystem& rs, const RatVec& t, const NilVector& x);

// Basis of {x in n : P([x, tau]) = 0}, echelonized, deterministic.
std::vector<NilVector> isotropy_basis(const RootSystem& rs, const NilVector& tau);

int orbit_dimension(const RootSystem& rs, const NilVector& tau);

// dim { P([x, tau]) : x in b }.
int b_tangent_dimension(const RootSystem& rs, const NilVector& tau);

// Point sum a_k e_{-beta_k} of r_-; a point of r_-^x when all a_k != 0.
NilVector cascade_point(const RootSystem& rs, const Cascade& c, const RatVec& a);

}  // namespace casc
