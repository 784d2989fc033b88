#pragma once

#include <optional>
#include <vector>

#include "casc/report.hpp"
#include "casc/rootsystem.hpp"

namespace casc {

struct CascadeNode {
  int root = -1;                  // positive-root index (beta)
  std::optional<int> parent;      // node index
  std::vector<int> support;       // Pi(beta), simple indices
  std::vector<int> orth_support;  // Pi(beta)^o
};

// Ordered cascade: parents before children, siblings by least simple index
// in their support.
struct Cascade {
  std::vector<CascadeNode> nodes;
  int m() const { return static_cast<int>(nodes.size()); }
  std::vector<int> root_ids() const {
    std::vector<int> r;
    for (const auto& n : nodes) r.push_back(n.root);
    return r;
  }
};

// Simple indices alpha with n_alpha(phi) > 0; throws unless phi is positive,
// asserts connectedness.
std::vector<int> support(const RootSystem& rs, int pos_id);

// phi is the highest root of the subsystem generated by its support.
bool is_locally_high(const RootSystem& rs, int pos_id);

// {alpha in support(phi) : (alpha, phi) = 0}; requires phi locally high.
std::vector<int> orthogonal_support(const RootSystem& rs, int pos_id);

// Highest roots of the simple components of the orthogonal-support
// subsystem; each is asserted locally high and strongly orthogonal to phi.
std::vector<int> offspring(const RootSystem& rs, int pos_id);

bool strongly_orthogonal(const RootSystem& rs, int a, int b);

// Breadth-first closure from the highest roots of the simple components.
// reverse_siblings flips every sibling batch; the resulting node set must
// not depend on it.
Cascade compute_cascade(const RootSystem& rs, bool reverse_siblings = false);

// nu = sum b_beta beta with integer b, via orthogonal projection plus exact
// residual check; nullopt when nu is outside the cascade lattice.
std::optional<IntVec> lattice_membership(const RootSystem& rs, const Cascade& c, const Weight& nu);

// Size of a maximum strongly orthogonal subset of the positive roots,
// by exhaustive branch and bound. Intended for rank <= 4.
int max_strongly_orthogonal_size(const RootSystem& rs);

// (a) pairwise strong orthogonality, (b) maximality under inclusion by brute
// force, (c) product of cascade reflections equals the longest element.
Check verify_theorem1(const RootSystem& rs, const Cascade& c);

}  // namespace casc
