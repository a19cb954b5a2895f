#ifndef QLC_LAURENT_HPP
#define QLC_LAURENT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "qlc/poly.hpp"

namespace qlc {

/// Dense Laurent polynomial over a field K: sum of c[i] * x^(lo+i).
/// Invariant: c is empty (zero) or both ends are nonzero.
template <class K>
struct Laurent {
  long lo = 0;
  std::vector<K> c;

  Laurent() = default;
  Laurent(long lo_, std::vector<K> c_) : lo(lo_), c(std::move(c_)) { trim(); }

  static Laurent monomial(K k, long e) {
    if (k == K(0)) return {};
    return Laurent(e, {std::move(k)});
  }
  static Laurent constant(K k) { return monomial(std::move(k), 0); }
  static Laurent from_poly(const Poly<K>& p, long shift = 0) {
    return Laurent(shift, p.c);
  }

  void trim() {
    size_t drop = 0;
    while (drop < c.size() && c[drop] == K(0)) ++drop;
    if (drop > 0) {
      c.erase(c.begin(), c.begin() + drop);
      lo += static_cast<long>(drop);
    }
    while (!c.empty() && c.back() == K(0)) c.pop_back();
    if (c.empty()) lo = 0;
  }
  bool is_zero() const { return c.empty(); }
  long hi() const { return lo + static_cast<long>(c.size()) - 1; }  // max exp
  K at(long e) const {
    long i = e - lo;
    if (i < 0 || i >= static_cast<long>(c.size())) return K(0);
    return c[i];
  }

  /// Splits x = x^lo * p with p(0) != 0 (for x != 0).
  Poly<K> poly_part() const { return Poly<K>(c); }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return (a.is_zero() && b.is_zero()) || (a.lo == b.lo && a.c == b.c);
  }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
};

template <class K>
Laurent<K> operator+(const Laurent<K>& a, const Laurent<K>& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.lo, b.lo);
  long hi = std::max(a.hi(), b.hi());
  std::vector<K> v(static_cast<size_t>(hi - lo + 1), K(0));
  for (size_t i = 0; i < a.c.size(); ++i) v[a.lo - lo + i] = v[a.lo - lo + i] + a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[b.lo - lo + i] = v[b.lo - lo + i] + b.c[i];
  return Laurent<K>(lo, std::move(v));
}

template <class K>
Laurent<K> operator-(const Laurent<K>& a) {
  Laurent<K> r = a;
  for (auto& x : r.c) x = K(0) - x;
  return r;
}

template <class K>
Laurent<K> operator-(const Laurent<K>& a, const Laurent<K>& b) {
  return a + (-b);
}

template <class K>
Laurent<K> operator*(const Laurent<K>& a, const Laurent<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<K> v(a.c.size() + b.c.size() - 1, K(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
  return Laurent<K>(a.lo + b.lo, std::move(v));
}

template <class K>
Laurent<K> operator*(const K& k, const Laurent<K>& a) {
  Laurent<K> r = a;
  for (auto& x : r.c) x = k * x;
  r.trim();
  return r;
}

/// Evaluation at an invertible point (negative exponents require x != 0).
template <class K>
K laurent_eval(const Laurent<K>& a, const K& x) {
  if (a.is_zero()) return K(0);
  K acc = poly_eval(a.poly_part(), x);
  if (a.lo == 0) return acc;
  K p(1);
  long e = a.lo;
  K base = x;
  if (e < 0) {
    if (x == K(0)) throw std::domain_error("division by zero");
    base = K(1) / x;
    e = -e;
  }
  for (long i = 0; i < e; ++i) p = p * base;
  return acc * p;
}

}  // namespace qlc

#endif  // QLC_LAURENT_HPP
