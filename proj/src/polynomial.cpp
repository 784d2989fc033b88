#include "casc/polynomial.hpp"

#include <stdexcept>

namespace casc {

NilPolynomial NilPolynomial::variable(int nvars, int var, Rat coeff) {
  NilPolynomial p(nvars);
  Mono m(nvars, 0);
  m[var] = 1;
  p.add_term(m, coeff);
  return p;
}

NilPolynomial NilPolynomial::constant(int nvars, Rat c) {
  NilPolynomial p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

void NilPolynomial::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NilPolynomial NilPolynomial::operator+(const NilPolynomial& o) const {
  NilPolynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

NilPolynomial NilPolynomial::operator-(const NilPolynomial& o) const {
  NilPolynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

NilPolynomial NilPolynomial::operator*(const NilPolynomial& o) const {
  NilPolynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m(ma);
      for (int i = 0; i < nvars_; ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

NilPolynomial NilPolynomial::scaled(const Rat& c) const {
  NilPolynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.add_term(m, v * c);
  return r;
}

NilPolynomial NilPolynomial::pow(int e) const {
  NilPolynomial r = constant(nvars_, Rat(1));
  for (int i = 0; i < e; ++i) r = r * (*this);
  return r;
}

Rat NilPolynomial::eval(const RatVec& coords) const {
  Rat s(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < m[i]; ++k) t *= coords[i];
    s += t;
  }
  return s;
}

int NilPolynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

bool NilPolynomial::homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int t = 0;
    for (int e : m) t += e;
    if (d < 0) d = t;
    if (t != d) return false;
  }
  return true;
}

NilPolynomial NilPolynomial::normalized() const {
  if (terms_.empty()) return *this;
  return scaled(1 / terms_.begin()->second);
}

bool NilPolynomial::proportional(const NilPolynomial& o, Rat* ratio) const {
  if (zero() || o.zero()) return false;
  if (terms_.size() != o.terms_.size()) return false;
  Rat r = o.terms_.begin()->second / terms_.begin()->second;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second * r != b->second) return false;
  if (ratio) *ratio = r;
  return true;
}

}  // namespace casc
