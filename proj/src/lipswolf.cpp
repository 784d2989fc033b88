#include "casc/lipswolf.hpp"

#include <algorithm>
#include <sstream>

namespace casc {

namespace {

std::vector<int> weight_rc_int(const RootSystem& rs, const Weight& w) {
  std::vector<int> v(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) v[i] = static_cast<int>(to_long(w.rc[i]));
  return v;
}

std::string seq_str(const RootSystem& rs, const std::vector<int>& seq) {
  std::ostringstream os;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) os << " ";
    const auto& c = rs.pos_root(seq[i]);
    for (size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
  }
  return os.str();
}

}  // namespace

const SpMat& MatrixCoefficient::neg_matrix(int pos_id) {
  auto it = cache_.find(pos_id);
  if (it != cache_.end()) return it->second;

  const RootSystem& rs = *v_->rs;
  SpMat m;
  if (pos_id < rs.rank()) {
    m = v_->f_mat[pos_id];
  } else {
    // e_{-phi} = [e_{-alpha_i}, e_{-psi}] / N(-alpha_i, -psi) for phi = alpha_i + psi
    int i = -1, psi = -1;
    for (int s = 0; s < rs.rank() && i < 0; ++s) {
      std::vector<int> c = rs.pos_root(pos_id);
      c[s] -= 1;
      auto r = rs.find_root(c);
      if (r && !r->neg) {
        i = s;
        psi = r->id;
      }
    }
    if (i < 0) throw std::logic_error("positive root with no simple summand");
    long n = rs.chevalley_N(SRoot{i, true}, SRoot{psi, true});
    const SpMat& a = neg_matrix(i);
    const SpMat& b = neg_matrix(psi);
    m.assign(v_->dim, {});
    for (int col = 0; col < v_->dim; ++col) {
      std::map<int, Rat> acc;
      for (const auto& [t, vb] : b[col])
        for (const auto& [r, va] : a[t]) acc[r] += va * vb;
      for (const auto& [t, va] : a[col])
        for (const auto& [r, vb] : b[t]) acc[r] -= vb * va;
      for (auto& [r, val] : acc) {
        val /= n;
        if (val != 0) m[col][r] = val;
      }
    }
  }
  return cache_.emplace(pos_id, std::move(m)).first->second;
}

Rat MatrixCoefficient::operator()(const std::vector<int>& monomial) {
  RatVec x = rvec(v_->dim);
  x[v_->highest] = 1;
  for (auto it = monomial.rbegin(); it != monomial.rend(); ++it)
    x = apply_mat(neg_matrix(*it), x);
  return x[v_->lowest];
}

LambdaPlusStar lambda_plus_star(const RootSystem& rs, const Cascade& c, const Weight& lambda) {
  LambdaPlusStar out;
  RatVec rc = rvec(rs.rank());
  out.cascade_coeffs.resize(c.m());
  for (int k = 0; k < c.m(); ++k) {
    SRoot beta{c.nodes[k].root, false};
    Rat p = rs.coroot_pairing(lambda, beta);
    out.cascade_coeffs[k] = to_long(p);
    rc = rc + p * rs.weight_of_root(beta).rc;
  }
  out.sum = Weight{rc};

  // independent route: lambda + lambda* = lambda - w0 lambda
  Weight other{lambda.rc - rs.apply(rs.longest_element(), lambda).rc};
  if (!(other == out.sum))
    throw std::logic_error("cascade sum route disagrees with the longest-element route");
  return out;
}

CodegreeResult codegree(const RootSystem& rs, MatrixCoefficient& f, const Weight& target) {
  CodegreeResult res;
  std::vector<int> t = weight_rc_int(rs, target);
  bool zero_target = std::all_of(t.begin(), t.end(), [](int c) { return c == 0; });
  if (zero_target) {
    res.k = 0;
    res.witness = {};
    return res;
  }

  std::vector<Mono> multisets = enumerate_weighted_multisets(rs, t);
  std::map<int, std::vector<Mono>> by_len;
  for (const auto& m : multisets) {
    int len = 0;
    for (int e : m) len += e;
    by_len[len].push_back(m);
  }

  // lengths ascending: the codegree is the first length where any ordering
  // of any weight-compatible monomial evaluates to a nonzero value
  for (const auto& [len, monos] : by_len) {
    for (const Mono& m : monos) {
      std::vector<int> seq;
      for (int v = 0; v < rs.num_pos(); ++v)
        for (int e = 0; e < m[v]; ++e) seq.push_back(v);
      std::sort(seq.begin(), seq.end());
      do {
        if (f(seq) != 0) {
          res.k = len;
          res.witness = seq;
          return res;
        }
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
  }
  // f vanishes on every weight-compatible monomial; flagged by the caller
  res.k = -1;
  return res;
}

NilPolynomial top_symbol(const RootSystem& rs, MatrixCoefficient& f, const Weight& target,
                         int k) {
  std::vector<int> t = weight_rc_int(rs, target);
  NilPolynomial sym(rs.num_pos());
  if (k == 0) return NilPolynomial::constant(rs.num_pos(), f({}));
  for (const Mono& m : enumerate_weighted_multisets(rs, t)) {
    int len = 0;
    for (int e : m) len += e;
    if (len != k) continue;
    std::vector<int> seq;
    Rat fact(1);
    for (int v = 0; v < rs.num_pos(); ++v) {
      for (int e = 0; e < m[v]; ++e) seq.push_back(v);
      for (int e = 2; e <= m[v]; ++e) fact *= e;
    }
    Rat val = f(seq);
    if (val != 0) sym.add_term(m, val / fact);
  }
  return sym;
}

Theorem9Result verify_theorem9(const RootSystem& rs, const Cascade& c, const Weight& lambda,
                               long dim_bound) {
  Theorem9Result res;
  res.check.id = "t9";
  res.lambda_fw = rs.fw_coords_int(lambda);

  LambdaPlusStar lps = lambda_plus_star(rs, c, lambda);
  res.cascade_coeffs = lps.cascade_coeffs;
  res.sum_fw = rs.fw_coords_int(lps.sum);
  Weight lstar{lps.sum.rc - lambda.rc};
  res.lambda_star_fw = rs.fw_coords_int(lstar);
  int compact = 0;
  for (long b : lps.cascade_coeffs) compact += static_cast<int>(b);

  IrrepModule V = build_irrep(rs, lambda, dim_bound);
  res.dim = V.dim;
  if (Int(V.dim) != weyl_dimension(rs, lambda))
    res.check.fail_with("dimension mismatch against the Weyl formula");

  // (a) lambda + lambda* is an invariant weight, with its block
  std::vector<int> t = weight_rc_int(rs, lps.sum);
  std::vector<NilPolynomial> block = invariant_block(rs, compact, t);
  if (block.size() != 1) {
    res.check.fail_with("invariant block at lambda+lambda* has dimension " +
                        std::to_string(block.size()));
    return res;
  }

  // (b) codegree
  MatrixCoefficient f(V);
  CodegreeResult cd = codegree(rs, f, lps.sum);
  res.codegree = cd.k;
  if (cd.k != compact)
    res.check.fail_with("codegree " + std::to_string(cd.k) + " != deg(lambda+lambda*) = " +
                        std::to_string(compact));

  // permutation invariance of the length-k coefficients
  if (cd.k > 0 && cd.k <= 6) {
    for (const Mono& m : enumerate_weighted_multisets(rs, t)) {
      int len = 0;
      for (int e : m) len += e;
      if (len != cd.k) continue;
      std::vector<int> seq;
      for (int v = 0; v < rs.num_pos(); ++v)
        for (int e = 0; e < m[v]; ++e) seq.push_back(v);
      std::sort(seq.begin(), seq.end());
      Rat ref = f(seq);
      do {
        if (f(seq) != ref) {
          res.check.fail_with("coefficient not permutation invariant on " + seq_str(rs, seq));
          break;
        }
      } while (std::next_permutation(seq.begin(), seq.end()));
    }
  }

  // (c) top symbol against the brute-force invariant
  NilPolynomial sym = top_symbol(rs, f, lps.sum, cd.k > 0 ? cd.k : 0);
  Rat ratio;
  if (sym.zero() || !block.front().proportional(sym, &ratio)) {
    res.check.fail_with("top symbol is not a scalar multiple of the invariant");
  } else {
    res.proportionality = ratio;
  }

  std::ostringstream os;
  os << "lambda_fw=";
  for (size_t i = 0; i < res.lambda_fw.size(); ++i) os << (i ? "," : "") << res.lambda_fw[i];
  os << " k=" << res.codegree << " dim=" << res.dim;
  res.check.detail = os.str();
  return res;
}

Check verify_joseph(const RootSystem& rs, const Cascade& c, const GeneratorSet& gens,
                    int coeff_bound) {
  Check chk;
  chk.id = "joseph";
  int realized = 0, dominant = 0;

  IntVec b(c.m(), 0);
  for (;;) {
    RatVec rc = rvec(rs.rank());
    int deg = 0;
    for (int k = 0; k < c.m(); ++k) {
      rc = rc + Rat(b[k]) * rs.weight_of_root(SRoot{c.nodes[k].root, false}).rc;
      deg += static_cast<int>(b[k]);
    }
    Weight nu{rc};
    if (rs.is_dominant(nu)) {
      ++dominant;
      std::vector<int> t = weight_rc_int(rs, nu);
      if (deg == 0) {
        ++realized;  // constants
      } else {
        auto exps = factorization_exponents(rs, gens, nu);
        bool ok = exps.has_value();
        if (ok)
          for (long e : *exps)
            if (e < 0) ok = false;
        if (!ok) {
          std::ostringstream os;
          for (int k = 0; k < c.m(); ++k) os << (k ? "," : "") << b[k];
          chk.fail_with("no nonnegative generator exponents for cascade coefficients " + os.str());
        }
        std::vector<NilPolynomial> block = invariant_block(rs, deg, t);
        if (block.size() == 1)
          ++realized;
        else
          chk.fail_with("invariant block dimension " + std::to_string(block.size()) +
                        " at a dominant cascade-lattice weight of degree " + std::to_string(deg));
      }
    }
    int k = 0;
    while (k < c.m() && b[k] == coeff_bound) b[k++] = 0;
    if (k == c.m()) break;
    ++b[k];
  }

  chk.detail = std::to_string(realized) + "/" + std::to_string(dominant) +
               " dominant lattice points realized, bound " + std::to_string(coeff_bound);
  return chk;
}

}  // namespace casc
