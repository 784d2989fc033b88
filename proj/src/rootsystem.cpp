#include "casc/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "casc/matrix.hpp"

namespace casc {

namespace {

bool admissible(char f, int r) {
  switch (f) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

// Positive roots ordered by height, then by decreasing lexicographic
// coordinates, so the simple roots come first as alpha_1, alpha_2, ...
bool root_before(const std::vector<int>& a, const std::vector<int>& b, int ha, int hb) {
  if (ha != hb) return ha < hb;
  return a > b;
}

}  // namespace

std::vector<CartanType> parse_cartan(const std::string& s) {
  std::vector<CartanType> out;
  size_t i = 0;
  while (i < s.size()) {
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad Cartan family in '" + s + "'");
    ++i;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("missing rank in '" + s + "'");
    int r = std::stoi(s.substr(i, j - i));
    if (!admissible(f, r))
      throw std::invalid_argument("inadmissible type " + std::string(1, f) + std::to_string(r));
    out.push_back({f, r});
    i = j;
    if (i < s.size()) {
      if (s[i] != 'x' && s[i] != 'X') throw std::invalid_argument("expected 'x' in '" + s + "'");
      ++i;
      if (i == s.size()) throw std::invalid_argument("trailing 'x' in '" + s + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty Cartan type");
  return out;
}

std::string cartan_string(const std::vector<CartanType>& factors) {
  std::string s;
  for (size_t k = 0; k < factors.size(); ++k) {
    if (k) s += 'x';
    s += factors[k].family;
    s += std::to_string(factors[k].rank);
  }
  return s;
}

RootSystem::RootSystem(std::vector<CartanType> factors) : factors_(std::move(factors)) {
  type_string_ = cartan_string(factors_);
  for (const auto& f : factors_) rank_ += f.rank;
  build_cartan();
  build_roots();
  build_w0();
  build_chevalley();
}

void RootSystem::build_cartan() {
  cartan_.assign(rank_, IntVec(rank_, 0));
  d_.assign(rank_, Rat(1));
  for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;

  auto bond = [&](int i, int j) {
    // single/double/triple bond resolved from the squared lengths:
    // a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i), (alpha_i, alpha_j) = -max(d_i, d_j).
    Rat ip = -std::max(d_[i], d_[j]);
    Rat aij = 2 * ip / (2 * d_[i]);
    Rat aji = 2 * ip / (2 * d_[j]);
    cartan_[i][j] = to_long(aij);
    cartan_[j][i] = to_long(aji);
  };

  int base = 0;
  for (const auto& f : factors_) {
    int r = f.rank;
    switch (f.family) {
      case 'A':
        for (int i = 0; i + 1 < r; ++i) bond(base + i, base + i + 1);
        break;
      case 'B':
        d_[base + r - 1] = ratio(1, 2);
        for (int i = 0; i + 1 < r; ++i) bond(base + i, base + i + 1);
        break;
      case 'C':
        for (int i = 0; i + 1 < r; ++i) d_[base + i] = ratio(1, 2);
        for (int i = 0; i + 1 < r; ++i) bond(base + i, base + i + 1);
        break;
      case 'D':
        for (int i = 0; i + 2 < r; ++i) bond(base + i, base + i + 1);
        bond(base + r - 3, base + r - 1);
        break;
      case 'E':
        bond(base + 0, base + 2);
        bond(base + 2, base + 3);
        bond(base + 1, base + 3);
        for (int i = 3; i + 1 < r; ++i) bond(base + i, base + i + 1);
        break;
      case 'F':
        d_[base + 2] = ratio(1, 2);
        d_[base + 3] = ratio(1, 2);
        bond(base + 0, base + 1);
        bond(base + 1, base + 2);
        bond(base + 2, base + 3);
        break;
      case 'G':
        d_[base + 0] = ratio(1, 3);
        bond(base + 0, base + 1);
        break;
    }
    base += r;
  }

  gram_.assign(rank_, rvec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) gram_[i][j] = d_[i] * Rat(cartan_[i][j]);

  // Inverse Cartan matrix: column j holds the root coordinates of
  // the fundamental weight varpi_{j+1}.
  QMat aug(rank_, 2 * rank_);
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) aug(i, j) = Rat(cartan_[i][j]);
    aug(i, rank_ + i) = 1;
  }
  aug.rref();
  cartan_inv_.assign(rank_, rvec(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) cartan_inv_[j][i] = aug(i, rank_ + j);

  // Dynkin components.
  std::vector<int> comp(rank_, -1);
  int nc = 0;
  for (int s = 0; s < rank_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < rank_; ++u)
        if (u != v && cartan_[v][u] != 0 && comp[u] < 0) {
          comp[u] = nc;
          stack.push_back(u);
        }
    }
    ++nc;
  }
  components_.assign(nc, {});
  for (int s = 0; s < rank_; ++s) components_[comp[s]].push_back(s);
}

void RootSystem::build_roots() {
  // Closure of the simple roots under simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> phi = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank_; ++i) {
      long pair = 0;
      for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * phi[j];
      std::vector<int> img = phi;
      img[i] -= static_cast<int>(pair);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }

  for (const auto& r : seen) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error("mixed-sign root in closure");
    if (nonneg) pos_.push_back(r);
  }
  if (2 * pos_.size() != seen.size()) throw std::logic_error("root set not symmetric");

  std::vector<int> ht(pos_.size());
  for (size_t i = 0; i < pos_.size(); ++i) {
    int h = 0;
    for (int c : pos_[i]) h += c;
    ht[i] = h;
  }
  std::vector<size_t> order(pos_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return root_before(pos_[a], pos_[b], ht[a], ht[b]);
  });
  std::vector<std::vector<int>> sorted;
  for (size_t i : order) sorted.push_back(pos_[i]);
  pos_ = std::move(sorted);

  height_.resize(pos_.size());
  len2_ = rvec(pos_.size());
  for (size_t i = 0; i < pos_.size(); ++i) {
    int h = 0;
    for (int c : pos_[i]) h += c;
    height_[i] = h;
    Rat l(0);
    for (int a = 0; a < rank_; ++a)
      for (int b = 0; b < rank_; ++b) l += gram_[a][b] * Rat(pos_[i][a] * pos_[i][b]);
    len2_[i] = l;
    pos_index_[pos_[i]] = static_cast<int>(i);
  }
  for (int i = 0; i < rank_; ++i)
    if (pos_[i][i] != 1 || height_[i] != 1) throw std::logic_error("simple roots not leading");
}

std::optional<SRoot> RootSystem::find_root(const std::vector<int>& coords) const {
  auto it = pos_index_.find(coords);
  if (it != pos_index_.end()) return SRoot{it->second, false};
  std::vector<int> neg(coords);
  for (int& c : neg) c = -c;
  it = pos_index_.find(neg);
  if (it != pos_index_.end()) return SRoot{it->second, true};
  return std::nullopt;
}

std::vector<int> RootSystem::coords_of(SRoot r) const {
  std::vector<int> c = pos_[r.id];
  if (r.neg)
    for (int& x : c) x = -x;
  return c;
}

std::optional<SRoot> RootSystem::root_sum(SRoot a, SRoot b) const {
  std::vector<int> ca = coords_of(a), cb = coords_of(b);
  for (int i = 0; i < rank_; ++i) ca[i] += cb[i];
  return find_root(ca);
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  if (a.rc.size() != static_cast<size_t>(rank_) || b.rc.size() != static_cast<size_t>(rank_))
    throw std::invalid_argument("weight from a different root system");
  Rat s(0);
  for (int i = 0; i < rank_; ++i) {
    if (a.rc[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a.rc[i] * gram_[i][j] * b.rc[j];
  }
  return s;
}

Rat RootSystem::coroot_pairing(const Weight& mu, SRoot beta) const {
  Rat num = 2 * inner(mu, weight_of_root(beta));
  return num / len2_[beta.id];
}

Weight RootSystem::weight_of_root(SRoot r) const {
  std::vector<int> c = coords_of(r);
  RatVec rc = rvec(rank_);
  for (int i = 0; i < rank_; ++i) rc[i] = c[i];
  return Weight{std::move(rc)};
}

Weight RootSystem::weight_from_fw(const IntVec& fw) const {
  if (fw.size() != static_cast<size_t>(rank_))
    throw std::invalid_argument("fundamental-weight coordinate count != rank");
  RatVec rc = rvec(rank_);
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) rc[i] += Rat(fw[j]) * cartan_inv_[j][i];
  return Weight{std::move(rc)};
}

RatVec RootSystem::fw_coords(const Weight& w) const {
  RatVec fw = rvec(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) fw[i] += Rat(cartan_[i][j]) * w.rc[j];
  return fw;
}

IntVec RootSystem::fw_coords_int(const Weight& w) const {
  RatVec fw = fw_coords(w);
  IntVec out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = to_long(fw[i]);
  return out;
}

bool RootSystem::in_weight_lattice(const Weight& w) const {
  for (const Rat& x : fw_coords(w))
    if (!is_integral(x)) return false;
  return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (const Rat& x : fw_coords(w))
    if (x < 0) return false;
  return true;
}

Weight RootSystem::rho() const { return weight_from_fw(IntVec(rank_, 1)); }

Weight RootSystem::reflect(SRoot beta, const Weight& mu) const {
  Rat p = coroot_pairing(mu, beta);
  Weight b = weight_of_root(beta);
  return Weight{mu.rc - p * b.rc};
}

SRoot RootSystem::reflect_root(SRoot beta, SRoot r) const {
  Weight img = reflect(beta, weight_of_root(r));
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = static_cast<int>(to_long(img.rc[i]));
  auto s = find_root(c);
  if (!s) throw std::logic_error("reflection image is not a root");
  return *s;
}

IntMat RootSystem::reflection_matrix(SRoot beta) const {
  IntMat m(rank_, IntVec(rank_, 0));
  for (int j = 0; j < rank_; ++j) {
    std::vector<int> e(rank_, 0);
    e[j] = 1;
    Weight img = reflect(beta, Weight{[&] {
                            RatVec rc = rvec(rank_);
                            rc[j] = 1;
                            return rc;
                          }()});
    for (int i = 0; i < rank_; ++i) m[i][j] = to_long(img.rc[i]);
  }
  return m;
}

Weight RootSystem::apply(const IntMat& w, const Weight& mu) const {
  RatVec rc = rvec(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) rc[i] += Rat(w[i][j]) * mu.rc[j];
  return Weight{std::move(rc)};
}

void RootSystem::build_w0() {
  // Chamber descent: drive rho to the antidominant chamber, left-multiplying
  // the accumulated matrix by each simple reflection used.
  w0_.assign(rank_, IntVec(rank_, 0));
  for (int i = 0; i < rank_; ++i) w0_[i][i] = 1;
  Weight x = rho();
  int steps = 0;
  for (;;) {
    RatVec fw = fw_coords(x);
    int i = -1;
    for (int k = 0; k < rank_; ++k)
      if (fw[k] > 0) {
        i = k;
        break;
      }
    if (i < 0) break;
    x = reflect(SRoot{i, false}, x);
    IntMat s = reflection_matrix(SRoot{i, false});
    IntMat prod(rank_, IntVec(rank_, 0));
    for (int a = 0; a < rank_; ++a)
      for (int b = 0; b < rank_; ++b)
        for (int c = 0; c < rank_; ++c) prod[a][b] += s[a][c] * w0_[c][b];
    w0_ = std::move(prod);
    ++steps;
  }
  if (steps != num_pos()) throw std::logic_error("descent length != number of positive roots");
}

std::vector<std::vector<int>> RootSystem::sub_components(const std::vector<int>& subset) const {
  std::vector<bool> in(rank_, false);
  for (int s : subset) in[s] = true;
  std::vector<bool> done(rank_, false);
  std::vector<std::vector<int>> comps;
  for (int s : subset) {
    if (done[s]) continue;
    std::vector<int> comp, stack{s};
    done[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int u = 0; u < rank_; ++u)
        if (in[u] && !done[u] && cartan_[v][u] != 0) {
          done[u] = true;
          stack.push_back(u);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

int RootSystem::highest_root_of_support(const std::vector<int>& support) const {
  std::vector<bool> in(rank_, false);
  for (int s : support) in[s] = true;
  int best = -1;
  for (int i = 0; i < num_pos(); ++i) {
    bool inside = true;
    for (int j = 0; j < rank_ && inside; ++j)
      if (pos_[i][j] != 0 && !in[j]) inside = false;
    if (!inside) continue;
    if (best < 0 || height_[i] > height_[best]) best = i;
  }
  if (best < 0) throw std::logic_error("empty subsystem");
  for (int i = 0; i < num_pos(); ++i) {
    if (i == best || height_[i] != height_[best]) continue;
    bool inside = true;
    for (int j = 0; j < rank_ && inside; ++j)
      if (pos_[i][j] != 0 && !in[j]) inside = false;
    if (inside) throw std::logic_error("subsystem highest root not unique; support not connected?");
  }
  return best;
}

Rat RootSystem::root_on_cartan(SRoot phi, const RatVec& h) const {
  std::vector<int> c = coords_of(phi);
  Rat v(0);
  for (int i = 0; i < rank_; ++i) {
    if (h[i] == 0) continue;
    long pair = 0;
    for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * c[j];
    v += h[i] * Rat(pair);
  }
  return v;
}

}  // namespace casc
