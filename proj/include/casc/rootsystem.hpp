#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casc/rational.hpp"

namespace casc {

struct CartanType {
  char family = 'A';  // A B C D E F G
  int rank = 0;
};

// Parses "A2", "b3", "A1xA1", ... Throws std::invalid_argument on anything
// inadmissible (A>=1, B>=2, C>=2, D>=4, E in 6..8, F=4, G=2). B2 and C2 are
// both accepted, as distinct labels.
std::vector<CartanType> parse_cartan(const std::string& s);
std::string cartan_string(const std::vector<CartanType>& factors);

// A root handle: index into the positive-root list plus a sign.
struct SRoot {
  int id = -1;
  bool neg = false;
  bool operator==(const SRoot& o) const { return id == o.id && neg == o.neg; }
};

// A point of h*, stored as rational coordinates over the simple roots.
struct Weight {
  RatVec rc;
  bool operator==(const Weight& o) const { return rc == o.rc; }
};

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;  // column j = image of alpha_j, in root coords

// Finite crystallographic root system over the simple-root basis, with the
// symmetrized Cartan form (long roots of squared length 2), the Weyl longest
// element, and a Chevalley basis with integer structure constants fixed by
// the extraspecial-pair convention.
//
// Positive roots are indexed 0..num_pos()-1 ordered by height, then by
// decreasing lexicographic coordinates; the first rank() entries are the
// simple roots in order. All data is immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(const std::string& type) : RootSystem(parse_cartan(type)) {}
  explicit RootSystem(std::vector<CartanType> factors);

  const std::string& type_string() const { return type_string_; }
  int rank() const { return rank_; }
  int num_pos() const { return static_cast<int>(pos_.size()); }

  const std::vector<int>& pos_root(int i) const { return pos_[i]; }
  int height(int i) const { return height_[i]; }
  long cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_j, alpha_i^vee>

  // Lookup by coordinates; nullopt when not a root.
  std::optional<SRoot> find_root(const std::vector<int>& coords) const;
  std::vector<int> coords_of(SRoot r) const;
  std::optional<SRoot> root_sum(SRoot a, SRoot b) const;

  // --- bilinear form -------------------------------------------------------
  Rat gram(int i, int j) const { return gram_[i][j]; }  // (alpha_i, alpha_j)
  Rat inner(const Weight& a, const Weight& b) const;
  Rat root_len2(int pos_id) const { return len2_[pos_id]; }  // (beta, beta)
  // 2 (mu, beta) / (beta, beta)
  Rat coroot_pairing(const Weight& mu, SRoot beta) const;

  // --- weights -------------------------------------------------------------
  Weight weight_of_root(SRoot r) const;
  Weight weight_from_fw(const IntVec& fw) const;          // fundamental-weight coords
  Weight weight_from_rc(RatVec rc) const { return Weight{std::move(rc)}; }
  RatVec fw_coords(const Weight& w) const;                // A * rc
  IntVec fw_coords_int(const Weight& w) const;            // throws if not integral
  bool in_weight_lattice(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  Weight rho() const;  // half sum of positive roots = sum of fundamental weights

  // --- Weyl group ----------------------------------------------------------
  Weight reflect(SRoot beta, const Weight& mu) const;  // s_beta(mu)
  SRoot reflect_root(SRoot beta, SRoot r) const;
  IntMat reflection_matrix(SRoot beta) const;
  const IntMat& longest_element() const { return w0_; }  // chamber-descent product
  Weight apply(const IntMat& w, const Weight& mu) const;

  // --- Dynkin components -----------------------------------------------------
  // Connected components of the Dynkin diagram, each a sorted list of simple
  // indices; for a subset of simple indices, its components within the
  // induced subdiagram.
  const std::vector<std::vector<int>>& components() const { return components_; }
  std::vector<std::vector<int>> sub_components(const std::vector<int>& simple_subset) const;
  // Unique highest root of the (irreducible) subsystem spanned by a connected
  // set of simple roots.
  int highest_root_of_support(const std::vector<int>& connected_support) const;

  // --- Chevalley basis -------------------------------------------------------
  // [e_a, e_b] = N(a,b) e_{a+b} when a+b is a root; 0 when a+b is neither a
  // root nor zero. Signs are fixed by making every extraspecial pair positive.
  long chevalley_N(SRoot a, SRoot b) const;
  // h_beta = [e_beta, e_{-beta}] over the simple coroots.
  const IntVec& coroot(int pos_id) const { return coroot_[pos_id]; }
  // phi(h) for h given over the simple coroots: sum_i h_i <phi, alpha_i^vee>.
  Rat root_on_cartan(SRoot phi, const RatVec& h) const;

 private:
  void build_cartan();
  void build_roots();
  void build_w0();
  void build_chevalley();
  long npos_pair(int i, int j) const;  // positive special pair, i < j in order

  std::vector<CartanType> factors_;
  std::string type_string_;
  int rank_ = 0;

  std::vector<IntVec> cartan_;          // a_ij = <alpha_j, alpha_i^vee>
  RatVec d_;                            // (alpha_i, alpha_i) / 2
  std::vector<RatVec> gram_;            // d_i * a_ij
  std::vector<RatVec> cartan_inv_;      // rc of fundamental weights, by column
  std::vector<std::vector<int>> pos_;   // sorted positive roots
  std::vector<int> height_;
  RatVec len2_;
  std::map<std::vector<int>, int> pos_index_;
  std::vector<std::vector<int>> components_;
  IntMat w0_;

  std::map<std::pair<int, int>, long> npos_;  // special-pair structure constants
  std::vector<IntVec> coroot_;
};

}  // namespace casc
