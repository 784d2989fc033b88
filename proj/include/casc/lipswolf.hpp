#pragma once

#include <map>
#include <optional>
#include <vector>

#include "casc/cascade.hpp"
#include "casc/invariants.hpp"
#include "casc/irrep.hpp"
#include "casc/polynomial.hpp"
#include "casc/report.hpp"

namespace casc {

// Evaluator for the matrix coefficient f(u) = <u v_lambda, z_{lambda*}>,
// realized as the lowest-weight coordinate of u v_lambda. Caches the action
// matrices of the non-simple negative root vectors, built from brackets of
// the simple ones.
class MatrixCoefficient {
 public:
  explicit MatrixCoefficient(const IrrepModule& v) : v_(&v) {}

  const IrrepModule& module() const { return *v_; }

  // f on the PBW monomial e_{-phi_1} ... e_{-phi_k} (positive-root ids,
  // applied in the written order).
  Rat operator()(const std::vector<int>& monomial);

 private:
  const SpMat& neg_matrix(int pos_id);
  const IrrepModule* v_;
  std::map<int, SpMat> cache_;
};

struct LambdaPlusStar {
  Weight sum;           // lambda + lambda*
  IntVec cascade_coeffs;  // <lambda, beta^vee> over the cascade order
};

// Cascade-sum route, asserted equal to lambda - w0 lambda.
LambdaPlusStar lambda_plus_star(const RootSystem& rs, const Cascade& c, const Weight& lambda);

struct CodegreeResult {
  int k = 0;
  // all weight-compatible monomials of length < k evaluate to zero, over
  // every ordering; false only when a theorem violation was found
  bool shorter_vanish = true;
  std::vector<int> witness;  // a length-k monomial with nonzero coefficient
};

// Minimal length of a weight-compatible U(n_-) monomial with f != 0.
CodegreeResult codegree(const RootSystem& rs, MatrixCoefficient& f, const Weight& target);

// f_(k) = sum_gamma f(e_-^gamma) / prod gamma(phi)!  prod e_phi^gamma(phi)
// over the degree-k exponent multisets of weight lambda + lambda*.
NilPolynomial top_symbol(const RootSystem& rs, MatrixCoefficient& f, const Weight& target, int k);

struct Theorem9Result {
  Check check;
  IntVec lambda_fw, lambda_star_fw, sum_fw;
  IntVec cascade_coeffs;
  long dim = 0;
  int codegree = 0;
  Rat proportionality;  // top symbol = proportionality * normalized xi
};

// (a) lambda+lambda* carries a one-dimensional invariant block, (b) codegree
// equals sum of the cascade coefficients with all shorter monomials
// vanishing, (c) the top symbol is an exact scalar multiple of the
// brute-force invariant. Also checks permutation invariance at length k.
Theorem9Result verify_theorem9(const RootSystem& rs, const Cascade& c, const Weight& lambda,
                               long dim_bound);

// Enumerates nu = sum b_beta beta with 0 <= b <= coeff_bound; every dominant
// member must have a one-dimensional invariant block in degree sum(b) and
// nonnegative generator exponents.
Check verify_joseph(const RootSystem& rs, const Cascade& c, const GeneratorSet& gens,
                    int coeff_bound);

}  // namespace casc
