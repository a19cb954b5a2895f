#ifndef QLC_POLY_HPP
#define QLC_POLY_HPP

#include <stdexcept>
#include <utility>
#include <vector>

namespace qlc {

/// Dense univariate polynomial over a field K. K needs K(long), ==, and
/// exact +,-,*,/. Invariant: coefficient list is empty (the zero
/// polynomial) or ends in a nonzero coefficient.
template <class K>
struct Poly {
  std::vector<K> c;  // c[i] multiplies x^i

  Poly() = default;
  explicit Poly(std::vector<K> v) : c(std::move(v)) { trim(); }

  static Poly constant(K k) {
    if (k == K(0)) return {};
    return Poly(std::vector<K>{std::move(k)});
  }
  static Poly one() { return constant(K(1)); }

  void trim() {
    while (!c.empty() && c.back() == K(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for 0
  const K& lc() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero");
    return c.back();
  }
  K at(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return K(0);
    return c[i];
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
  std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
  for (size_t i = 0; i < a.c.size(); ++i) v[i] = v[i] + a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) v[i] = v[i] + b.c[i];
  return Poly<K>(std::move(v));
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
  std::vector<K> v = a.c;
  for (auto& x : v) x = K(0) - x;
  return Poly<K>(std::move(v));
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
  return a + (-b);
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<K> v(a.c.size() + b.c.size() - 1, K(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) v[i + j] = v[i + j] + a.c[i] * b.c[j];
  return Poly<K>(std::move(v));
}

template <class K>
Poly<K> operator*(const K& k, const Poly<K>& a) {
  std::vector<K> v = a.c;
  for (auto& x : v) x = k * x;
  return Poly<K>(std::move(v));
}

/// Euclidean division: a = q*b + r with deg r < deg b. Requires b != 0.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divrem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  std::vector<K> r = a.c;
  long db = b.degree();
  if (a.degree() < db) return {Poly<K>{}, a};
  std::vector<K> q(a.degree() - db + 1, K(0));
  for (long i = a.degree(); i >= db; --i) {
    K coeff = r[i];
    if (coeff == K(0)) continue;
    K factor = coeff / b.lc();
    q[i - db] = factor;
    for (long j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - factor * b.c[j];
  }
  return {Poly<K>(std::move(q)), Poly<K>(std::move(r))};
}

/// Exact division; throws if the remainder is nonzero.
template <class K>
Poly<K> poly_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

/// Monic gcd (Euclid). Each remainder is rescaled to monic immediately so
/// that coefficient fractions stay reduced instead of swelling step over
/// step. gcd(0,0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  auto monic = [](Poly<K> p) {
    if (p.is_zero() || p.lc() == K(1)) return p;
    K inv_lc = K(1) / p.lc();
    return inv_lc * p;
  };
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!b.is_zero()) {
    auto r = monic(poly_divrem(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Least common multiple, monic; lcm(0,x) = 0.
template <class K>
Poly<K> poly_lcm(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly<K> g = poly_gcd(a, b);
  Poly<K> m = poly_div(a * b, g);
  K inv_lc = K(1) / m.lc();
  return inv_lc * m;
}

/// Horner evaluation.
template <class K>
K poly_eval(const Poly<K>& a, const K& x) {
  K acc(0);
  for (size_t i = a.c.size(); i-- > 0;) acc = acc * x + a.c[i];
  return acc;
}

}  // namespace qlc

#endif  // QLC_POLY_HPP
