#pragma once

#include <map>
#include <vector>

#include "casc/rational.hpp"

namespace casc {

using Mono = std::vector<int>;  // exponents over the positive-root order

// Sparse polynomial in the coordinate functions e_phi on n_-, exact rational
// coefficients. Terms are kept in lexicographic monomial order, which makes
// iteration, normalization and serialization deterministic.
class NilPolynomial {
 public:
  NilPolynomial() = default;
  explicit NilPolynomial(int nvars) : nvars_(nvars) {}

  static NilPolynomial variable(int nvars, int var, Rat coeff = Rat(1));
  static NilPolynomial constant(int nvars, Rat c);

  int nvars() const { return nvars_; }
  bool zero() const { return terms_.empty(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  void add_term(const Mono& m, const Rat& c);

  NilPolynomial operator+(const NilPolynomial& o) const;
  NilPolynomial operator-(const NilPolynomial& o) const;
  NilPolynomial operator*(const NilPolynomial& o) const;
  NilPolynomial scaled(const Rat& c) const;
  NilPolynomial pow(int e) const;

  Rat eval(const RatVec& coords) const;

  int degree() const;  // total degree; -1 for the zero polynomial
  bool homogeneous() const;

  // Divides by the coefficient of the lex-first term.
  NilPolynomial normalized() const;

  // True when o == r * this for a nonzero rational r; reports r.
  bool proportional(const NilPolynomial& o, Rat* ratio = nullptr) const;

  bool operator==(const NilPolynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

 private:
  int nvars_ = 0;
  std::map<Mono, Rat> terms_;
};

}  // namespace casc
