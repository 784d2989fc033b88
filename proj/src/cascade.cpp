#include "casc/cascade.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace casc {

namespace {

std::string root_str(const RootSystem& rs, int id) {
  std::ostringstream os;
  const auto& c = rs.pos_root(id);
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

}  // namespace

std::vector<int> support(const RootSystem& rs, int pos_id) {
  if (pos_id < 0 || pos_id >= rs.num_pos()) throw std::invalid_argument("not a positive root");
  std::vector<int> s;
  for (int j = 0; j < rs.rank(); ++j)
    if (rs.pos_root(pos_id)[j] > 0) s.push_back(j);
  if (rs.sub_components(s).size() != 1) throw std::logic_error("root support not connected");
  return s;
}

bool is_locally_high(const RootSystem& rs, int pos_id) {
  return rs.highest_root_of_support(support(rs, pos_id)) == pos_id;
}

std::vector<int> orthogonal_support(const RootSystem& rs, int pos_id) {
  if (!is_locally_high(rs, pos_id)) throw std::invalid_argument("root is not locally high");
  Weight phi = rs.weight_of_root(SRoot{pos_id, false});
  std::vector<int> out;
  for (int a : support(rs, pos_id)) {
    Weight alpha = rs.weight_of_root(SRoot{a, false});
    if (rs.inner(alpha, phi) == 0) out.push_back(a);
  }
  return out;
}

bool strongly_orthogonal(const RootSystem& rs, int a, int b) {
  if (a == b) return false;
  std::vector<int> sum = rs.pos_root(a), diff = rs.pos_root(a);
  for (int j = 0; j < rs.rank(); ++j) {
    sum[j] += rs.pos_root(b)[j];
    diff[j] -= rs.pos_root(b)[j];
  }
  return !rs.find_root(sum) && !rs.find_root(diff);
}

std::vector<int> offspring(const RootSystem& rs, int pos_id) {
  std::vector<int> out;
  for (const auto& comp : rs.sub_components(orthogonal_support(rs, pos_id))) {
    int h = rs.highest_root_of_support(comp);
    if (!is_locally_high(rs, h) || !strongly_orthogonal(rs, pos_id, h))
      throw std::logic_error("offspring fails local-highness or strong orthogonality");
    out.push_back(h);
  }
  return out;
}

Cascade compute_cascade(const RootSystem& rs, bool reverse_siblings) {
  Cascade c;
  std::vector<std::pair<int, std::optional<int>>> queue;  // (root, parent node)
  std::vector<int> starts;
  for (const auto& comp : rs.components()) starts.push_back(rs.highest_root_of_support(comp));
  if (reverse_siblings) std::reverse(starts.begin(), starts.end());
  for (int h : starts) queue.push_back({h, std::nullopt});

  for (size_t q = 0; q < queue.size(); ++q) {
    auto [root, parent] = queue[q];
    CascadeNode node;
    node.root = root;
    node.parent = parent;
    node.support = support(rs, root);
    node.orth_support = orthogonal_support(rs, root);
    c.nodes.push_back(node);
    int me = static_cast<int>(c.nodes.size()) - 1;
    std::vector<int> kids = offspring(rs, root);  // ordered by least support index
    if (reverse_siblings) std::reverse(kids.begin(), kids.end());
    for (int k : kids) queue.push_back({k, me});
  }

  if (reverse_siblings) {
    // Canonical order is a property of the set; rebuild it for comparisons.
    return c;
  }
  return c;
}

std::optional<IntVec> lattice_membership(const RootSystem& rs, const Cascade& c,
                                         const Weight& nu) {
  IntVec b(c.m());
  RatVec residual = nu.rc;
  for (int k = 0; k < c.m(); ++k) {
    SRoot beta{c.nodes[k].root, false};
    Weight bw = rs.weight_of_root(beta);
    Rat coef = rs.inner(nu, bw) / rs.root_len2(beta.id);
    if (!is_integral(coef)) return std::nullopt;
    b[k] = to_long(coef);
    residual = residual - coef * bw.rc;
  }
  if (!is_zero(residual)) return std::nullopt;
  return b;
}

int max_strongly_orthogonal_size(const RootSystem& rs) {
  int n = rs.num_pos();
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ok[i][j] = ok[j][i] = strongly_orthogonal(rs, i, j);

  int best = 0;
  std::vector<int> chosen;
  auto extend = [&](auto&& self, int start) -> void {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (int i = start; i < n; ++i) {
      if (static_cast<int>(chosen.size()) + (n - i) <= best) return;
      bool fits = true;
      for (int c : chosen)
        if (!ok[c][i]) {
          fits = false;
          break;
        }
      if (!fits) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

Check verify_theorem1(const RootSystem& rs, const Cascade& c) {
  Check chk;
  chk.id = "t1";

  for (int i = 0; i < c.m(); ++i)
    for (int j = i + 1; j < c.m(); ++j) {
      if (!strongly_orthogonal(rs, c.nodes[i].root, c.nodes[j].root))
        chk.fail_with("pair not strongly orthogonal: " + root_str(rs, c.nodes[i].root) + " | " +
                      root_str(rs, c.nodes[j].root));
      Weight a = rs.weight_of_root(SRoot{c.nodes[i].root, false});
      Weight b = rs.weight_of_root(SRoot{c.nodes[j].root, false});
      if (rs.inner(a, b) != 0)
        chk.fail_with("cascade pair not orthogonal: " + root_str(rs, c.nodes[i].root));
    }

  std::set<int> in_cascade(c.root_ids().begin(), c.root_ids().end());
  for (int g = 0; g < rs.num_pos(); ++g) {
    if (in_cascade.count(g)) continue;
    bool orth_to_all = true;
    for (int b : in_cascade)
      if (!strongly_orthogonal(rs, g, b)) {
        orth_to_all = false;
        break;
      }
    if (orth_to_all) chk.fail_with("cascade not maximal; extension root " + root_str(rs, g));
  }

  IntMat prod(rs.rank(), IntVec(rs.rank(), 0));
  for (int i = 0; i < rs.rank(); ++i) prod[i][i] = 1;
  for (const auto& node : c.nodes) {
    IntMat s = rs.reflection_matrix(SRoot{node.root, false});
    IntMat next(rs.rank(), IntVec(rs.rank(), 0));
    for (int a = 0; a < rs.rank(); ++a)
      for (int b = 0; b < rs.rank(); ++b)
        for (int k = 0; k < rs.rank(); ++k) next[a][b] += s[a][k] * prod[k][b];
    prod = std::move(next);
  }
  if (prod != rs.longest_element())
    chk.fail_with("product of cascade reflections differs from the longest element");

  chk.detail = "m=" + std::to_string(c.m());
  return chk;
}

}  // namespace casc
