#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "casc/rootsystem.hpp"

namespace casc {

struct DimensionBound : std::runtime_error {
  explicit DimensionBound(long required)
      : std::runtime_error("irrep dimension " + std::to_string(required) +
                           " exceeds the configured bound"),
        required_dimension(required) {}
  long required_dimension;
};

// Column-sparse matrix: col[j] maps row index to value, so M e_j = col[j].
using SpMat = std::vector<std::map<int, Rat>>;

RatVec apply_mat(const SpMat& m, const RatVec& x);

// Finite-dimensional irreducible module with highest weight lambda, built by
// spanning with lowering operators; dependent and null vectors are rejected
// through the contravariant form, and the final dimension is checked against
// the Weyl dimension formula.
struct IrrepModule {
  const RootSystem* rs = nullptr;
  Weight lambda;
  int dim = 0;
  std::vector<IntVec> weights_fw;  // per basis vector
  std::vector<SpMat> e_mat, f_mat;  // per simple index
  int highest = 0;
  int lowest = 0;

  RatVec h_diagonal(int simple_i) const;  // <mu, alpha_i^vee> per basis vector
};

// prod_{phi > 0} (lambda + rho, phi) / (rho, phi); lambda must be dominant
// integral.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

IrrepModule build_irrep(const RootSystem& rs, const Weight& lambda, long dim_bound = 200);

}  // namespace casc
