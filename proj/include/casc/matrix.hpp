#pragma once

#include <optional>
#include <vector>

#include "casc/rational.hpp"

namespace casc {

// Dense rational matrix. Elimination is fraction-free (Bareiss) on a
// denominator-cleared integer copy, so intermediate entries stay integral;
// the reduced form is rationalized only at the end.
class QMat {
 public:
  QMat() = default;
  QMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Rat(0)) {}

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }

  Rat& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const Rat& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  // Reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref();

  size_t rank() const;

  bool operator==(const QMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

// Basis of {x : M x = 0}; vectors ordered by their free column, each with a
// unit entry at that column. Deterministic.
std::vector<RatVec> nullspace(const QMat& m);

// Unique solution of A x = b, or nullopt if the system is inconsistent or
// underdetermined.
std::optional<RatVec> solve_unique(const QMat& a, const RatVec& b);

}  // namespace casc
