#ifndef QLC_SVALUE_HPP
#define QLC_SVALUE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlc/qvalue.hpp"

namespace qlc {

namespace detail {

// Machinery for gcd in Q(u)[X] without fraction-field Euclid: clear the
// Q(u) coefficients to Q[u] and run a primitive pseudo-remainder sequence.
// An X-polynomial over Q[u] is held as a trimmed coefficient vector.

inline Poly<Rat> upoly_shift(const Poly<Rat>& p, long k) {
  if (p.is_zero() || k == 0) return p;
  std::vector<Rat> v(static_cast<size_t>(k), Rat(0));
  v.insert(v.end(), p.c.begin(), p.c.end());
  return Poly<Rat>(std::move(v));
}

inline void xu_trim(std::vector<Poly<Rat>>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline Poly<Rat> xu_content(const std::vector<Poly<Rat>>& v) {
  Poly<Rat> g;
  for (const auto& p : v) {
    g = poly_gcd(g, p);
    if (!g.is_zero() && g.degree() == 0) break;
  }
  return g;
}

inline void xu_make_primitive(std::vector<Poly<Rat>>& v) {
  Poly<Rat> cont = xu_content(v);
  if (cont.is_zero() || cont.degree() == 0) return;
  for (auto& p : v)
    if (!p.is_zero()) p = poly_div(p, cont);
}

// Clear denominators and u-units from an X-polynomial over Q(u); the result
// is a primitive associate in Q[u][X].
inline std::vector<Poly<Rat>> xu_from(const Poly<QValue>& p) {
  Poly<Rat> common = Poly<Rat>::one();
  for (const auto& c : p.c)
    if (!c.is_zero()) common = poly_lcm(common, c.den());
  std::vector<Laurent<Rat>> ls;
  ls.reserve(p.c.size());
  bool seen = false;
  long minlo = 0;
  for (const auto& c : p.c) {
    if (c.is_zero()) {
      ls.push_back({});
      continue;
    }
    Laurent<Rat> l = c.num() * Laurent<Rat>::from_poly(poly_div(common, c.den()));
    if (!seen || l.lo < minlo) {
      minlo = l.lo;
      seen = true;
    }
    ls.push_back(std::move(l));
  }
  std::vector<Poly<Rat>> out;
  out.reserve(ls.size());
  for (const auto& l : ls)
    out.push_back(l.is_zero() ? Poly<Rat>{}
                              : upoly_shift(l.poly_part(), l.lo - minlo));
  xu_trim(out);
  xu_make_primitive(out);
  return out;
}

// Primitive pseudo-remainder of r by b (b nonzero, trimmed).
inline std::vector<Poly<Rat>> xu_prem_primitive(std::vector<Poly<Rat>> r,
                                                const std::vector<Poly<Rat>>& b) {
  long db = static_cast<long>(b.size()) - 1;
  const Poly<Rat>& d = b.back();
  while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
    long dr = static_cast<long>(r.size()) - 1;
    Poly<Rat> lr = r.back();
    std::vector<Poly<Rat>> nr(static_cast<size_t>(dr));
    for (long i = 0; i < dr; ++i) {
      Poly<Rat> t = d * r[i];
      long j = i - (dr - db);
      if (j >= 0) t = t - lr * b[static_cast<size_t>(j)];
      nr[static_cast<size_t>(i)] = std::move(t);
    }
    r = std::move(nr);
    xu_trim(r);
  }
  xu_make_primitive(r);
  return r;
}

}  // namespace detail

/// gcd in Q(u)[X], returned monic. Overload of the generic Euclid: two-level
/// fraction towers swell there, so the computation runs as a primitive
/// pseudo-remainder sequence in Q[u][X] instead.
inline Poly<QValue> poly_gcd(const Poly<QValue>& a, const Poly<QValue>& b) {
  if (a.is_zero() || b.is_zero()) {
    const Poly<QValue>& n = a.is_zero() ? b : a;
    if (n.is_zero()) return {};
    QValue inv_lc = n.lc().inv();
    return inv_lc * n;
  }
  std::vector<Poly<Rat>> x = detail::xu_from(a), y = detail::xu_from(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<Poly<Rat>> r = detail::xu_prem_primitive(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<QValue> coeffs;
  coeffs.reserve(x.size());
  for (const auto& p : x)
    coeffs.push_back(p.is_zero()
                         ? QValue(0)
                         : QValue(Laurent<Rat>::from_poly(p),
                                  Laurent<Rat>::constant(Rat(1))));
  Poly<QValue> g(std::move(coeffs));
  QValue inv_lc = g.lc().inv();
  return inv_lc * g;
}

/// Result of specializing the complex parameter: either a genuine value or
/// an explicit pole marker (never silently zero).
struct QResult {
  bool is_pole = false;
  Half at{0};
  QValue value;

  std::string str() const {
    if (is_pole) {
      std::ostringstream os;
      os << "pole at s = " << at.tw << "/2";
      return os.str();
    }
    return value.str();
  }
};

/// Element of Q(u)(X) with X = q^(-s): every abelian local factor with
/// argument linear in s lives here. Canonical form mirrors QValue one level
/// up: numerator Laurent in X whose polynomial part has nonzero constant
/// term, denominator monic in X with nonzero constant term, the two coprime
/// over Q(u). Products of factors are therefore always fully reduced as a
/// single rational function before any substitution — removable
/// singularities cancel symbolically, never pointwise.
class SValue {
 public:
  SValue() = default;
  SValue(long n) : SValue(QValue(n)) {}
  SValue(const Rat& r) : SValue(QValue(r)) {}
  SValue(const QValue& q)
      : num_(Laurent<QValue>::constant(q)), den_(Poly<QValue>::one()) {
    if (q.is_zero()) num_ = {};
  }

  SValue(const Laurent<QValue>& num, const Laurent<QValue>& den) {
    if (den.is_zero()) throw std::domain_error("not a value: zero denominator");
    if (num.is_zero()) {
      den_ = Poly<QValue>::one();
      return;
    }
    Poly<QValue> p = num.poly_part();
    Poly<QValue> q = den.poly_part();
    Poly<QValue> g = poly_gcd(p, q);
    if (g.degree() > 0) {
      p = poly_div(p, g);
      q = poly_div(q, g);
    }
    QValue inv_lc = q.lc().inv();
    p = inv_lc * p;
    q = inv_lc * q;
    num_ = Laurent<QValue>::from_poly(p, num.lo - den.lo);
    den_ = std::move(q);
  }

  /// q^(k*s + c) as a monomial in X and u.
  static SValue q_lin(SLin f) {
    return SValue(Laurent<QValue>::monomial(QValue::u_pow(f.c.tw), -f.k),
                  Laurent<QValue>::constant(QValue(1)));
  }
  static SValue x_pow(long j) { return q_lin({-j, {0}}); }

  const Laurent<QValue>& num() const { return num_; }
  const Poly<QValue>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  bool x_free() const { return is_zero() || (num_.lo == 0 && num_.c.size() == 1 && den_.degree() == 0); }

  /// The underlying Q(u) element when no X is present.
  QValue as_qvalue() const {
    if (is_zero()) return QValue(0);
    if (!x_free()) throw std::domain_error("value still depends on s");
    return num_.c[0];
  }

  friend bool operator==(const SValue& a, const SValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const SValue& a, const SValue& b) { return !(a == b); }

  friend SValue operator+(const SValue& a, const SValue& b) {
    Laurent<QValue> bden = Laurent<QValue>::from_poly(b.den_);
    Laurent<QValue> aden = Laurent<QValue>::from_poly(a.den_);
    return SValue(a.num_ * bden + b.num_ * aden, aden * bden);
  }
  friend SValue operator-(const SValue& a) {
    SValue r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend SValue operator-(const SValue& a, const SValue& b) { return a + (-b); }
  friend SValue operator*(const SValue& a, const SValue& b) {
    return SValue(a.num_ * b.num_, Laurent<QValue>::from_poly(a.den_) *
                                       Laurent<QValue>::from_poly(b.den_));
  }
  friend SValue operator/(const SValue& a, const SValue& b) { return a * b.inv(); }

  SValue inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return SValue(Laurent<QValue>::from_poly(den_), num_);
  }

  SValue pow(long e) const {
    if (e < 0) return inv().pow(-e);
    SValue acc(1), base = *this;
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  /// Specialization s = s0, i.e. X = q^(-s0). The canonical form guarantees
  /// a vanishing denominator is a genuine pole of the reduced function.
  QResult substitute_s(Half s0) const {
    QValue x0 = QValue::u_pow(-s0.tw);
    QValue d = poly_eval(den_, x0);
    if (d.is_zero()) return {true, s0, QValue(0)};
    QValue n = laurent_eval(num_, x0);
    return {false, s0, n / d};
  }

  /// Value at X = 0, i.e. the limit s -> +infinity (den(0) != 0 always).
  QValue at_infinity() const {
    QValue d = den_.at(0);
    QValue n = num_.lo > 0 ? QValue(0) : (num_.lo == 0 && !num_.is_zero() ? num_.c[0] : QValue(0));
    if (!is_zero() && num_.lo < 0) throw std::domain_error("pole at s = infinity");
    return n / d;
  }

  /// Canonical textual form over Z[u]: both layers cleared of u-denominators
  /// and content, denominator normalized to lexicographic (X, then u)
  /// leading coefficient 1. Monomials print "c*q^(k/2)*X^(j)" (the X part
  /// omitted when j = 0) sorted by decreasing j, then decreasing k.
  std::string str() const {
    if (is_zero()) return "0";
    // Clear coefficient denominators with a common multiple.
    Poly<Rat> common = Poly<Rat>::one();
    auto absorb = [&common](const QValue& v) { common = poly_lcm(common, v.den()); };
    for (const auto& v : num_.c) absorb(v);
    for (const auto& v : den_.c) absorb(v);
    std::vector<std::pair<long, Laurent<Rat>>> n2, d2;
    for (size_t i = 0; i < num_.c.size(); ++i)
      if (!num_.c[i].is_zero())
        n2.push_back({num_.lo + static_cast<long>(i), cleared(num_.c[i], common)});
    for (size_t i = 0; i < den_.c.size(); ++i)
      if (!den_.c[i].is_zero())
        d2.push_back({static_cast<long>(i), cleared(den_.c[i], common)});
    // Pull the global power of u out of the denominator.
    long m = d2.front().second.lo;
    for (const auto& e : d2) m = std::min(m, e.second.lo);
    for (auto& e : n2) e.second.lo -= m;
    for (auto& e : d2) e.second.lo -= m;
    // Divide out common polynomial content in u.
    Poly<Rat> content;
    for (const auto& e : d2) content = poly_gcd(content, e.second.poly_part());
    for (const auto& e : n2) content = poly_gcd(content, e.second.poly_part());
    if (content.degree() > 0) {
      for (auto& e : n2)
        e.second = Laurent<Rat>::from_poly(poly_div(e.second.poly_part(), content), e.second.lo);
      for (auto& e : d2)
        e.second = Laurent<Rat>::from_poly(poly_div(e.second.poly_part(), content), e.second.lo);
    }
    // Scale the lexicographic leading denominator coefficient to 1.
    Rat lead = d2.back().second.c.back();
    if (lead != 1) {
      Rat inv_lead = 1 / lead;
      for (auto& e : n2)
        for (auto& cc : e.second.c) cc *= inv_lead;
      for (auto& e : d2)
        for (auto& cc : e.second.c) cc *= inv_lead;
    }
    std::string ns = bivariate_str(n2);
    bool den_is_one = d2.size() == 1 && d2[0].first == 0 && d2[0].second.lo == 0 &&
                      d2[0].second.c.size() == 1 && d2[0].second.c[0] == 1;
    if (den_is_one) return ns;
    return "(" + ns + ") / (" + bivariate_str(d2) + ")";
  }

 private:
  static Laurent<Rat> cleared(const QValue& v, const Poly<Rat>& common) {
    Poly<Rat> extra = poly_div(common, v.den());
    return v.num() * Laurent<Rat>::from_poly(extra);
  }

  static std::string bivariate_str(const std::vector<std::pair<long, Laurent<Rat>>>& terms) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = terms.size(); i-- > 0;) {
      long j = terms[i].first;
      const Laurent<Rat>& l = terms[i].second;
      for (long e = l.hi(); e >= l.lo; --e) {
        Rat c = l.at(e);
        if (c == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c) << "*q^(" << e << "/2)";
        if (j != 0) os << "*X^(" << j << ")";
        first = false;
      }
    }
    return os.str();
  }

  Laurent<QValue> num_;                     // Laurent in X over Q(u)
  Poly<QValue> den_ = Poly<QValue>::one();  // monic in X, nonzero at X = 0
};

inline SValue canonicalize(const SValue& x) { return x; }

inline QResult substitute_s(const SValue& x, Half s0) { return x.substitute_s(s0); }

/// f(s) -> f(-s), i.e. X -> 1/X on both layers.
inline SValue mirror_s(const SValue& f) {
  if (f.is_zero()) return f;
  auto reverse = [](const Laurent<QValue>& l) {
    std::vector<QValue> c(l.c.rbegin(), l.c.rend());
    return Laurent<QValue>(-l.hi(), std::move(c));
  };
  return SValue(reverse(f.num()), reverse(Laurent<QValue>::from_poly(f.den())));
}

}  // namespace qlc

#endif  // QLC_SVALUE_HPP
