#include <stdexcept>

#include "casc/rootsystem.hpp"

namespace casc {

// Structure constants are generated from the extraspecial pairs: positive
// roots carry a total order (height, then decreasing lex); for each
// non-simple positive chi the decomposition chi = r + s with minimal r is the
// extraspecial pair and gets N(r,s) = p+1 > 0, where p is the chain length
// max{p : s - p r is a root}. Every other constant follows from
//
//   N(a,b)N(c,d)/(a+b,a+b) + N(b,c)N(a,d)/(b+c,b+c) + N(c,a)N(b,d)/(c+a,c+a) = 0
//
// for roots a+b+c+d = 0 with no two opposite, together with
// N(a,b) = -N(b,a) = -N(-a,-b) and the rotation rule for a+b+c = 0:
// N(a,b) = N(b,c) (c,c)/(a,a).

long RootSystem::npos_pair(int i, int j) const {
  if (i == j) throw std::logic_error("npos_pair: equal roots");
  if (i > j) return -npos_pair(j, i);
  auto it = npos_.find({i, j});
  if (it == npos_.end()) throw std::logic_error("npos_pair: missing special pair");
  return it->second;
}

long RootSystem::chevalley_N(SRoot a, SRoot b) const {
  auto s = root_sum(a, b);
  if (!s) return 0;  // a+b is zero or not a root; [e_a, e_{-a}] is coroot(a), handled elsewhere
  if (!a.neg && !b.neg) return npos_pair(a.id, b.id);
  if (a.neg && b.neg) return -chevalley_N(SRoot{a.id, false}, SRoot{b.id, false});
  if (a.neg) return -chevalley_N(b, a);
  // a positive, b negative
  Rat v;
  if (!s->neg) {
    // rotate through (-b, s), a positive pair summing to a
    v = -Rat(chevalley_N(SRoot{b.id, false}, *s)) * len2_[s->id] / len2_[a.id];
  } else {
    // rotate through (-s, a), a positive pair summing to -b
    v = Rat(chevalley_N(SRoot{s->id, false}, a)) * len2_[s->id] / len2_[b.id];
  }
  return to_long(v);
}

void RootSystem::build_chevalley() {
  auto chain_down = [&](int r, int s) {
    int p = 0;
    std::vector<int> c = pos_[s];
    for (;;) {
      for (int t = 0; t < rank_; ++t) c[t] -= pos_[r][t];
      if (!find_root(c)) break;
      ++p;
    }
    return p;
  };

  for (int chi = rank_; chi < num_pos(); ++chi) {
    std::vector<std::pair<int, int>> specials;
    for (int i = 0; i < chi; ++i) {
      std::vector<int> rem = pos_[chi];
      bool ok = true;
      for (int t = 0; t < rank_; ++t) {
        rem[t] -= pos_[i][t];
        if (rem[t] < 0) ok = false;
      }
      if (!ok) continue;
      auto it = pos_index_.find(rem);
      if (it != pos_index_.end() && it->second > i) specials.push_back({i, it->second});
    }
    if (specials.empty()) throw std::logic_error("non-simple root with no decomposition");

    auto [r1, s1] = specials.front();
    npos_[{r1, s1}] = chain_down(r1, s1) + 1;

    for (size_t k = 1; k < specials.size(); ++k) {
      auto [r, s] = specials[k];
      Rat t2(0), t3(0);
      std::vector<int> diff = pos_[s1];
      for (int t = 0; t < rank_; ++t) diff[t] -= pos_[r][t];
      if (auto d = find_root(diff)) {
        t2 = Rat(chevalley_N(SRoot{s1, false}, SRoot{r, true}) *
                 chevalley_N(SRoot{r1, false}, SRoot{s, true})) /
             len2_[d->id];
      }
      diff = pos_[r1];
      for (int t = 0; t < rank_; ++t) diff[t] -= pos_[r][t];
      if (auto d = find_root(diff)) {
        t3 = Rat(chevalley_N(SRoot{r, true}, SRoot{r1, false}) *
                 chevalley_N(SRoot{s1, false}, SRoot{s, true})) /
             len2_[d->id];
      }
      Rat val = (t2 + t3) * len2_[chi] / Rat(npos_[{r1, s1}]);
      long n = to_long(val);
      if (std::abs(n) != chain_down(r, s) + 1)
        throw std::logic_error("structure constant violates the p+1 rule");
      npos_[{r, s}] = n;
    }
  }

  // h_phi = [e_phi, e_{-phi}] over the simple coroots:
  // phi = sum n_i alpha_i gives h_phi = sum n_i (alpha_i,alpha_i)/(phi,phi) h_i.
  coroot_.resize(num_pos());
  for (int i = 0; i < num_pos(); ++i) {
    IntVec c(rank_);
    for (int j = 0; j < rank_; ++j) c[j] = to_long(Rat(pos_[i][j]) * 2 * d_[j] / len2_[i]);
    coroot_[i] = std::move(c);
  }
}

}  // namespace casc
