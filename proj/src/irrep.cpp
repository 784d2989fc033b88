#include "casc/irrep.hpp"

#include <algorithm>

#include "casc/matrix.hpp"

namespace casc {

RatVec apply_mat(const SpMat& m, const RatVec& x) {
  RatVec y = rvec(m.size());
  for (size_t j = 0; j < m.size(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& [i, v] : m[j]) y[i] += v * x[j];
  }
  return y;
}

RatVec IrrepModule::h_diagonal(int simple_i) const {
  RatVec d = rvec(dim);
  for (int k = 0; k < dim; ++k) d[k] = Rat(weights_fw[k][simple_i]);
  return d;
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda) || !rs.in_weight_lattice(lambda))
    throw std::invalid_argument("weight is not dominant integral");
  Weight rho = rs.rho();
  Weight lr{lambda.rc + rho.rc};
  Rat prod(1);
  for (int p = 0; p < rs.num_pos(); ++p) {
    Weight phi = rs.weight_of_root(SRoot{p, false});
    prod *= rs.inner(lr, phi) / rs.inner(rho, phi);
  }
  if (!is_integral(prod)) throw std::logic_error("Weyl dimension is not integral");
  return prod.get_num();
}

namespace {

// One candidate vector f_j b at the current level.
struct Candidate {
  int j;     // lowering operator
  int b;     // basis index at the previous level
};

}  // namespace

IrrepModule build_irrep(const RootSystem& rs, const Weight& lambda, long dim_bound) {
  Int wd = weyl_dimension(rs, lambda);
  if (wd > dim_bound) {
    if (!wd.fits_slong_p()) throw DimensionBound(dim_bound + 1);
    throw DimensionBound(wd.get_si());
  }

  IrrepModule V;
  V.rs = &rs;
  V.lambda = lambda;
  V.weights_fw.push_back(rs.fw_coords_int(lambda));
  V.e_mat.assign(rs.rank(), SpMat{});
  V.f_mat.assign(rs.rank(), SpMat{});

  // Gram matrices of the contravariant form, one block per weight; the form
  // is positive definite on each weight space, so a candidate is dependent
  // exactly when its Schur complement against the selected block vanishes.
  std::map<IntVec, std::vector<int>> level_prev;  // weight -> basis indices
  std::map<IntVec, QMat> gram_prev;
  level_prev[V.weights_fw[0]] = {0};
  QMat g0(1, 1);
  g0(0, 0) = 1;
  gram_prev[V.weights_fw[0]] = g0;

  int first_prev = 0;  // basis index of the first previous-level vector

  while (!level_prev.empty()) {
    int first_cur = static_cast<int>(V.weights_fw.size());

    // Pairing of candidates x = f_j b against anything at the previous level:
    // <f_j b, w> = <b, e_j w>, and e_j w is expressible through the already
    // built matrices. Candidates grouped by weight.
    std::map<IntVec, std::vector<Candidate>> groups;
    for (const auto& [wfw, ids] : level_prev)
      for (int b : ids)
        for (int j = 0; j < rs.rank(); ++j) {
          IntVec w = wfw;
          for (int i = 0; i < rs.rank(); ++i) w[i] -= rs.cartan(i, j);
          groups[w].push_back({j, b});
        }

    std::map<IntVec, std::vector<int>> level_cur;
    std::map<IntVec, QMat> gram_cur;

    for (auto& [wfw, cands] : groups) {
      std::vector<int> selected;            // basis indices
      std::vector<Candidate> selected_def;  // their definitions
      QMat gsel;

      // <f_j b, f_j' b'> = <b, f_j'(e_j b') + delta_jj' <wt(b'), aj^vee> b'>.
      auto pairing = [&](const Candidate& x, const Candidate& y) -> Rat {
        // e_j b' over the level before the previous one:
        std::map<int, Rat> ejb;
        if (y.b < static_cast<int>(V.e_mat[x.j].size())) ejb = V.e_mat[x.j][y.b];
        // f_j' of that, over the previous level:
        std::map<int, Rat> comb;
        for (const auto& [t, v] : ejb) {
          if (t < static_cast<int>(V.f_mat[y.j].size()))
            for (const auto& [s, fv] : V.f_mat[y.j][t]) comb[s] += v * fv;
        }
        if (x.j == y.j) comb[y.b] += Rat(V.weights_fw[y.b][x.j]);
        // contract with the previous-level Gram block of wt(b):
        const IntVec& wb = V.weights_fw[x.b];
        Rat acc(0);
        auto lit = level_prev.find(wb);
        if (lit == level_prev.end()) return acc;
        const std::vector<int>& blk = lit->second;
        const QMat& G = gram_prev.at(wb);
        // position of x.b within its block
        size_t xpos = std::find(blk.begin(), blk.end(), x.b) - blk.begin();
        for (const auto& [s, v] : comb) {
          auto spos = std::find(blk.begin(), blk.end(), s);
          if (spos == blk.end()) continue;  // different weight, pairing zero
          acc += v * G(xpos, spos - blk.begin());
        }
        return acc;
      };

      for (const Candidate& x : cands) {
        RatVec row = rvec(selected.size());
        for (size_t s = 0; s < selected_def.size(); ++s) row[s] = pairing(x, selected_def[s]);
        Rat q = pairing(x, x);

        std::optional<RatVec> y;
        if (selected.empty())
          y = RatVec{};
        else
          y = solve_unique(gsel, row);
        if (!y) throw std::logic_error("selected Gram block is singular");
        Rat resid = q;
        for (size_t s = 0; s < y->size(); ++s) resid -= (*y)[s] * row[s];

        if (resid != 0) {
          // new basis vector
          int id = static_cast<int>(V.weights_fw.size());
          V.weights_fw.push_back(wfw);
          if (static_cast<int>(V.weights_fw.size()) > dim_bound + 1)
            throw std::logic_error("basis exceeded the dimension oracle");
          selected.push_back(id);
          selected_def.push_back(x);
          QMat g2(selected.size(), selected.size());
          for (size_t a = 0; a < selected.size() - 1; ++a)
            for (size_t b = 0; b < selected.size() - 1; ++b) g2(a, b) = gsel(a, b);
          for (size_t a = 0; a + 1 < selected.size(); ++a) {
            g2(selected.size() - 1, a) = row[a];
            g2(a, selected.size() - 1) = row[a];
          }
          g2(selected.size() - 1, selected.size() - 1) = q;
          gsel = std::move(g2);
          // f column: unit vector at the new index
          if (static_cast<int>(V.f_mat[x.j].size()) <= x.b) V.f_mat[x.j].resize(x.b + 1);
          V.f_mat[x.j][x.b][id] = 1;
        } else {
          // dependent: f_j b = sum y_s (selected s)
          if (static_cast<int>(V.f_mat[x.j].size()) <= x.b) V.f_mat[x.j].resize(x.b + 1);
          for (size_t s = 0; s < y->size(); ++s)
            if ((*y)[s] != 0) V.f_mat[x.j][x.b][selected[s]] = (*y)[s];
        }
      }
      if (!selected.empty()) {
        level_cur[wfw] = selected;
        gram_cur[wfw] = gsel;
      }
    }

    // e-matrices for the vectors just selected: e_i(f_j b) = f_j(e_i b) +
    // delta_ij <wt(b), alpha_i^vee> b, a combination over the previous level.
    for (const auto& [wfw, ids] : level_cur) {
      (void)wfw;
      for (int id : ids) {
        // find the defining candidate: the unit f-column pointing at id
        for (int j = 0; j < rs.rank(); ++j) {
          for (int b = first_prev; b < first_cur; ++b) {
            if (b >= static_cast<int>(V.f_mat[j].size())) continue;
            auto it = V.f_mat[j][b].find(id);
            if (it == V.f_mat[j][b].end() || it->second != 1 || V.f_mat[j][b].size() != 1)
              continue;
            for (int i = 0; i < rs.rank(); ++i) {
              std::map<int, Rat> col;
              std::map<int, Rat> eib;
              if (b < static_cast<int>(V.e_mat[i].size())) eib = V.e_mat[i][b];
              for (const auto& [t, v] : eib)
                if (t < static_cast<int>(V.f_mat[j].size()))
                  for (const auto& [s, fv] : V.f_mat[j][t]) col[s] += v * fv;
              if (i == j) col[b] += Rat(V.weights_fw[b][i]);
              for (auto cit = col.begin(); cit != col.end();)
                cit = (cit->second == 0) ? col.erase(cit) : std::next(cit);
              if (static_cast<int>(V.e_mat[i].size()) <= id) V.e_mat[i].resize(id + 1);
              V.e_mat[i][id] = std::move(col);
            }
            goto next_vector;
          }
        }
      next_vector:;
      }
    }

    first_prev = first_cur;
    level_prev = std::move(level_cur);
    gram_prev = std::move(gram_cur);
  }

  V.dim = static_cast<int>(V.weights_fw.size());
  if (Int(V.dim) != wd)
    throw std::logic_error("constructed dimension " + std::to_string(V.dim) +
                           " differs from the Weyl formula " + wd.get_str());

  for (int j = 0; j < rs.rank(); ++j) {
    V.e_mat[j].resize(V.dim);
    V.f_mat[j].resize(V.dim);
  }

  // the lowest weight space is one-dimensional at w0(lambda)
  Weight low = rs.apply(rs.longest_element(), lambda);
  IntVec low_fw = rs.fw_coords_int(low);
  int found = -1;
  for (int k = 0; k < V.dim; ++k)
    if (V.weights_fw[k] == low_fw) {
      if (found >= 0) throw std::logic_error("lowest weight space not one-dimensional");
      found = k;
    }
  if (found < 0) throw std::logic_error("lowest weight vector missing");
  V.lowest = found;
  return V;
}

}  // namespace casc
