#include "casc/invariants.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "casc/matrix.hpp"

namespace casc {

namespace {

struct Move {
  int src;  // psi: multiplied variable
  int dst;  // chi = psi - alpha: differentiated variable
  long coeff;
};

// e_alpha f = - sum_psi N(alpha, -psi) e_psi d/d e_chi f  over psi - alpha = chi positive.
std::vector<Move> derivation_moves(const RootSystem& rs, int simple_i) {
  std::vector<Move> moves;
  for (int psi = 0; psi < rs.num_pos(); ++psi) {
    std::vector<int> c = rs.pos_root(psi);
    c[simple_i] -= 1;
    auto chi = rs.find_root(c);
    if (!chi || chi->neg) continue;
    moves.push_back({psi, chi->id, -rs.chevalley_N(SRoot{simple_i, false}, SRoot{psi, true})});
  }
  return moves;
}

std::string rc_str(const std::vector<int>& rc) {
  std::ostringstream os;
  for (size_t i = 0; i < rc.size(); ++i) os << (i ? "," : "") << rc[i];
  return os.str();
}

}  // namespace

NilPolynomial derivation_action(const RootSystem& rs, int simple_i, const NilPolynomial& f) {
  std::vector<Move> moves = derivation_moves(rs, simple_i);
  NilPolynomial out(f.nvars());
  for (const auto& [m, c] : f.terms())
    for (const auto& mv : moves) {
      if (m[mv.dst] == 0) continue;
      Mono m2(m);
      m2[mv.dst] -= 1;
      m2[mv.src] += 1;
      out.add_term(m2, c * Rat(mv.coeff * m[mv.dst]));
    }
  return out;
}

std::vector<int> mono_weight_rc(const RootSystem& rs, const Mono& m) {
  std::vector<int> w(rs.rank(), 0);
  for (int v = 0; v < rs.num_pos(); ++v)
    if (m[v] != 0)
      for (int j = 0; j < rs.rank(); ++j) w[j] += m[v] * rs.pos_root(v)[j];
  return w;
}

namespace {

// Exponent vectors with prescribed root-coordinate sum; degree fixed when
// exact_deg is set, otherwise free (it is bounded by the height anyway).
void enumerate_rec(const RootSystem& rs, int var, std::vector<int>& w, int ht_left,
                   std::optional<int> deg_left, Mono& cur, std::vector<Mono>& out) {
  if (var < 0) {
    if (ht_left == 0 && (!deg_left || *deg_left == 0)) out.push_back(cur);
    return;
  }
  if (deg_left) {
    // each remaining root has height between 1 and ht(var)
    if (ht_left < *deg_left || ht_left > *deg_left * rs.height(var)) return;
  } else if (ht_left < 0) {
    return;
  }
  int emax = ht_left / rs.height(var);
  if (deg_left) emax = std::min(emax, *deg_left);
  for (int j = 0; j < rs.rank(); ++j) {
    int c = rs.pos_root(var)[j];
    if (c > 0) emax = std::min(emax, w[j] / c);
  }
  for (int e = 0; e <= emax; ++e) {
    if (e > 0)
      for (int j = 0; j < rs.rank(); ++j) w[j] -= rs.pos_root(var)[j];
    cur[var] = e;
    enumerate_rec(rs, var - 1, w, ht_left - e * rs.height(var),
                  deg_left ? std::optional<int>(*deg_left - e) : std::nullopt, cur, out);
  }
  for (int j = 0; j < rs.rank(); ++j) w[j] += emax * rs.pos_root(var)[j];
  cur[var] = 0;
}

std::vector<Mono> enumerate_by_weight(const RootSystem& rs, std::optional<int> d,
                                      const std::vector<int>& weight_rc) {
  for (int c : weight_rc)
    if (c < 0) return {};
  std::vector<int> w = weight_rc;
  int ht = 0;
  for (int c : w) ht += c;
  Mono cur(rs.num_pos(), 0);
  std::vector<Mono> out;
  enumerate_rec(rs, rs.num_pos() - 1, w, ht, d, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Mono> enumerate_monomials(const RootSystem& rs, int d,
                                      const std::vector<int>& weight_rc) {
  return enumerate_by_weight(rs, d, weight_rc);
}

std::vector<Mono> enumerate_weighted_multisets(const RootSystem& rs,
                                               const std::vector<int>& weight_rc) {
  return enumerate_by_weight(rs, std::nullopt, weight_rc);
}

namespace {

std::vector<NilPolynomial> solve_block(const RootSystem& rs,
                                       const std::vector<std::vector<Move>>& moves,
                                       const std::vector<Mono>& monos) {
  if (monos.empty()) return {};
  std::map<std::pair<int, Mono>, int> rows;
  std::vector<std::vector<std::pair<int, Rat>>> cols(monos.size());
  for (size_t k = 0; k < monos.size(); ++k) {
    const Mono& m = monos[k];
    for (int i = 0; i < rs.rank(); ++i)
      for (const auto& mv : moves[i]) {
        if (m[mv.dst] == 0) continue;
        Mono m2(m);
        m2[mv.dst] -= 1;
        m2[mv.src] += 1;
        auto [it, fresh] = rows.try_emplace({i, std::move(m2)}, static_cast<int>(rows.size()));
        cols[k].push_back({it->second, Rat(mv.coeff * m[mv.dst])});
      }
  }
  QMat mat(rows.size(), monos.size());
  for (size_t k = 0; k < monos.size(); ++k)
    for (const auto& [r, v] : cols[k]) mat(r, k) += v;

  std::vector<NilPolynomial> basis;
  for (const auto& vec : nullspace(mat)) {
    NilPolynomial p(rs.num_pos());
    for (size_t k = 0; k < monos.size(); ++k) p.add_term(monos[k], vec[k]);
    basis.push_back(p.normalized());
  }
  return basis;
}

}  // namespace

std::vector<NilPolynomial> invariant_block(const RootSystem& rs, int d,
                                           const std::vector<int>& weight_rc) {
  std::vector<std::vector<Move>> moves;
  for (int i = 0; i < rs.rank(); ++i) moves.push_back(derivation_moves(rs, i));
  return solve_block(rs, moves, enumerate_monomials(rs, d, weight_rc));
}

namespace {

// All degree-d monomials grouped by weight, in lex weight order.
std::vector<std::pair<std::vector<int>, std::vector<Mono>>> degree_blocks(const RootSystem& rs,
                                                                          int d) {
  std::map<std::vector<int>, std::vector<Mono>> grouped;
  Mono cur(rs.num_pos(), 0);
  // plain compositions of d over the variables
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var < 0) {
      if (left == 0) grouped[mono_weight_rc(rs, cur)].push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[var] = e;
      self(self, var - 1, left - e);
    }
    cur[var] = 0;
  };
  rec(rec, rs.num_pos() - 1, d);
  std::vector<std::pair<std::vector<int>, std::vector<Mono>>> out;
  for (auto& [w, ms] : grouped) {
    std::sort(ms.begin(), ms.end());
    out.push_back({w, std::move(ms)});
  }
  return out;
}

void note_entry(const RootSystem& rs, const Cascade& c, int d,
                const std::vector<int>& weight_rc, const std::vector<NilPolynomial>& kernel,
                std::map<std::vector<int>, int>& first_degree, Spectrum& sp) {
  if (kernel.empty()) return;
  SpectrumEntry e;
  e.weight_rc = weight_rc;
  e.degree = d;
  e.multiplicity = static_cast<int>(kernel.size());
  e.xi = kernel.front();
  if (e.multiplicity != 1)
    sp.violations.push_back("multiplicity " + std::to_string(e.multiplicity) + " at weight " +
                            rc_str(weight_rc) + " degree " + std::to_string(d));
  auto [it, fresh] = first_degree.try_emplace(weight_rc, d);
  if (!fresh)
    sp.violations.push_back("weight " + rc_str(weight_rc) + " occurs in degrees " +
                            std::to_string(it->second) + " and " + std::to_string(d));

  RatVec rc = rvec(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) rc[j] = weight_rc[j];
  Weight nu{rc};
  if (!rs.is_dominant(nu))
    sp.violations.push_back("invariant weight not dominant: " + rc_str(weight_rc));
  auto b = lattice_membership(rs, c, nu);
  if (!b) {
    sp.violations.push_back("invariant weight outside the cascade lattice: " + rc_str(weight_rc));
  } else {
    for (long x : *b)
      if (x < 0)
        sp.violations.push_back("negative cascade coefficient at weight " + rc_str(weight_rc));
    e.cascade_coeffs = *b;
  }
  sp.entries.push_back(std::move(e));
}

}  // namespace

Spectrum weight_spectrum(const RootSystem& rs, const Cascade& c, int max_degree) {
  std::vector<std::vector<Move>> moves;
  for (int i = 0; i < rs.rank(); ++i) moves.push_back(derivation_moves(rs, i));

  Spectrum sp;
  sp.max_degree = max_degree;
  std::map<std::vector<int>, int> first_degree;
  for (int d = 1; d <= max_degree; ++d) {
    auto blocks = degree_blocks(rs, d);
    std::vector<std::vector<NilPolynomial>> kernels(blocks.size());
#pragma omp parallel for schedule(dynamic)
    for (long long k = 0; k < static_cast<long long>(blocks.size()); ++k)
      kernels[k] = solve_block(rs, moves, blocks[k].second);
    for (size_t k = 0; k < blocks.size(); ++k)
      note_entry(rs, c, d, blocks[k].first, kernels[k], first_degree, sp);
  }
  return sp;
}

Spectrum weight_spectrum_serial(const RootSystem& rs, const Cascade& c, int max_degree) {
  std::vector<std::vector<Move>> moves;
  for (int i = 0; i < rs.rank(); ++i) moves.push_back(derivation_moves(rs, i));

  Spectrum sp;
  sp.max_degree = max_degree;
  std::map<std::vector<int>, int> first_degree;
  for (int d = 1; d <= max_degree; ++d)
    for (const auto& [w, monos] : degree_blocks(rs, d))
      note_entry(rs, c, d, w, solve_block(rs, moves, monos), first_degree, sp);
  return sp;
}

GeneratorSet extract_generators(const RootSystem& rs, const Cascade& c, const Spectrum& s,
                                std::vector<std::string>* violations) {
  GeneratorSet out;
  std::map<std::vector<int>, int> table;  // weight -> degree, strictly lower degrees
  std::vector<std::pair<std::vector<int>, int>> pending;
  int flushed = 0;
  for (const auto& e : s.entries) {
    while (flushed < static_cast<int>(pending.size()) &&
           pending[flushed].second < e.degree) {
      table.emplace(pending[flushed].first, pending[flushed].second);
      ++flushed;
    }
    bool composite = false;
    for (const auto& [w1, d1] : table) {
      std::vector<int> w2(e.weight_rc);
      bool nonneg = true;
      for (size_t j = 0; j < w2.size(); ++j) {
        w2[j] -= w1[j];
        if (w2[j] < 0) nonneg = false;
      }
      if (!nonneg) continue;
      auto it = table.find(w2);
      if (it != table.end() && d1 + it->second == e.degree) {
        composite = true;
        break;
      }
    }
    if (!composite) out.gens.push_back(e);
    pending.push_back({e.weight_rc, e.degree});
  }
  if (static_cast<int>(out.gens.size()) < c.m())
    throw GeneratorShortfall("found " + std::to_string(out.gens.size()) + " of " +
                             std::to_string(c.m()) + " generators up to degree " +
                             std::to_string(s.max_degree));
  if (static_cast<int>(out.gens.size()) > c.m() && violations)
    violations->push_back("more prime weights than the cascade cardinality: " +
                          std::to_string(out.gens.size()));
  return out;
}

std::optional<IntVec> factorization_exponents(const RootSystem& rs, const GeneratorSet& g,
                                              const Weight& nu) {
  QMat m(rs.rank(), g.gens.size());
  for (size_t k = 0; k < g.gens.size(); ++k)
    for (int i = 0; i < rs.rank(); ++i) m(i, k) = Rat(g.gens[k].weight_rc[i]);
  auto sol = solve_unique(m, nu.rc);
  if (!sol) return std::nullopt;
  IntVec e(g.gens.size());
  for (size_t k = 0; k < g.gens.size(); ++k) {
    if (!is_integral((*sol)[k])) return std::nullopt;
    e[k] = to_long((*sol)[k]);
  }
  return e;
}

std::optional<TorusMonomial> restrict_to_torus(const RootSystem& rs, const Cascade& c,
                                               const NilPolynomial& xi) {
  std::vector<int> slot(rs.num_pos(), -1);
  for (int k = 0; k < c.m(); ++k) slot[c.nodes[k].root] = k;

  std::optional<TorusMonomial> found;
  for (const auto& [m, coeff] : xi.terms()) {
    bool survives = true;
    for (int v = 0; v < rs.num_pos() && survives; ++v)
      if (m[v] != 0 && slot[v] < 0) survives = false;
    if (!survives) continue;
    if (found) return std::nullopt;  // not a monomial on r_-
    TorusMonomial t;
    t.exps.assign(c.m(), 0);
    for (int v = 0; v < rs.num_pos(); ++v)
      if (m[v] != 0) t.exps[slot[v]] = m[v];
    t.coeff = coeff;
    found = std::move(t);
  }
  if (!found) return std::nullopt;  // vanishes identically on r_-
  long total = 0;
  for (long e : found->exps) total += e;
  if (total != xi.degree()) return std::nullopt;
  return found;
}

bool highest_weight_vector_check(const RootSystem& rs, const NilPolynomial& xi) {
  if (xi.zero() || !xi.homogeneous()) return false;
  auto it = xi.terms().begin();
  std::vector<int> w = mono_weight_rc(rs, it->first);
  for (; it != xi.terms().end(); ++it)
    if (mono_weight_rc(rs, it->first) != w) return false;
  RatVec rc = rvec(rs.rank());
  for (int j = 0; j < rs.rank(); ++j) rc[j] = w[j];
  return rs.is_dominant(Weight{rc});
}

int default_max_degree(const RootSystem& rs) {
  int d = 1;
  for (const auto& fac : parse_cartan(rs.type_string())) {
    int b;
    if (fac.family == 'A')
      b = (fac.rank + 2) / 2;
    else if (fac.family == 'G')
      b = 6;
    else
      b = 4;
    d = std::max(d, b);
  }
  return d;
}

}  // namespace casc
