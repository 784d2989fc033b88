#include "casc/matrix.hpp"

namespace casc {

std::vector<size_t> QMat::rref() {
  // Clear denominators row by row; kernel and row space are unchanged.
  std::vector<std::vector<Int>> z(r_, std::vector<Int>(c_));
  for (size_t i = 0; i < r_; ++i) {
    Int l(1);
    for (size_t j = 0; j < c_; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*this)(i, j).get_den_mpz_t());
    for (size_t j = 0; j < c_; ++j) {
      Rat v = (*this)(i, j) * Rat(l);
      z[i][j] = v.get_num();
    }
  }

  // Bareiss forward elimination: every division below is exact.
  std::vector<size_t> pivots;
  Int prev(1);
  size_t row = 0;
  for (size_t col = 0; col < c_ && row < r_; ++col) {
    size_t pr = row;
    while (pr < r_ && z[pr][col] == 0) ++pr;
    if (pr == r_) continue;
    std::swap(z[pr], z[row]);
    for (size_t i = row + 1; i < r_; ++i) {
      for (size_t j = col + 1; j < c_; ++j) {
        Int t = z[i][j] * z[row][col] - z[i][col] * z[row][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][col] = 0;
    }
    prev = z[row][col];
    pivots.push_back(col);
    ++row;
  }

  // Rationalize: normalize pivots to 1 and eliminate above.
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) (*this)(i, j) = Rat(z[i][j]);
  for (size_t k = pivots.size(); k-- > 0;) {
    size_t pc = pivots[k];
    Rat inv = 1 / (*this)(k, pc);
    for (size_t j = pc; j < c_; ++j) (*this)(k, j) *= inv;
    for (size_t i = 0; i < k; ++i) {
      Rat f = (*this)(i, pc);
      if (f == 0) continue;
      for (size_t j = pc; j < c_; ++j) (*this)(i, j) -= f * (*this)(k, j);
    }
  }
  return pivots;
}

size_t QMat::rank() const {
  QMat m(*this);
  return m.rref().size();
}

std::vector<RatVec> nullspace(const QMat& m) {
  QMat r(m);
  std::vector<size_t> pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    RatVec v = rvec(m.cols());
    v[j] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve_unique(const QMat& a, const RatVec& b) {
  QMat aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;                     // underdetermined
  RatVec x = rvec(a.cols());
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

}  // namespace casc
