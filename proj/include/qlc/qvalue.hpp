#ifndef QLC_QVALUE_HPP
#define QLC_QVALUE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qlc/half.hpp"
#include "qlc/laurent.hpp"
#include "qlc/poly.hpp"
#include "qlc/rat.hpp"

namespace qlc {

/// Element of Q(u), where u stands for q^(1/2) over a formal residue size q.
///
/// Canonical form (unique per value): numerator a Laurent polynomial in u
/// whose polynomial part has nonzero constant term, denominator a monic
/// polynomial in u with nonzero constant term, and the two polynomial parts
/// coprime. The constructor establishes the form; every operation preserves
/// it, so equality is structural and canonicalization is idempotent.
class QValue {
 public:
  QValue() = default;
  QValue(long n) : num_(Laurent<Rat>::constant(Rat(n))), den_(Poly<Rat>::one()) {
    if (n == 0) num_ = {};
  }
  QValue(const Rat& r)
      : num_(Laurent<Rat>::constant(r)), den_(Poly<Rat>::one()) {}

  /// General fraction of Laurent polynomials, reduced to canonical form.
  QValue(const Laurent<Rat>& num, const Laurent<Rat>& den) {
    if (den.is_zero()) throw std::domain_error("not a value: zero denominator");
    if (num.is_zero()) {
      den_ = Poly<Rat>::one();
      return;
    }
    Poly<Rat> p = num.poly_part();
    Poly<Rat> q = den.poly_part();
    Poly<Rat> g = poly_gcd(p, q);
    if (g.degree() > 0) {
      p = poly_div(p, g);
      q = poly_div(q, g);
    }
    Rat inv_lc = Rat(1) / q.lc();
    p = inv_lc * p;
    q = inv_lc * q;
    num_ = Laurent<Rat>::from_poly(p, num.lo - den.lo);
    den_ = std::move(q);
  }

  static QValue u_pow(long k) {
    return QValue(Laurent<Rat>::monomial(Rat(1), k), Laurent<Rat>::constant(Rat(1)));
  }
  /// q^h for a half-integer exponent h.
  static QValue q_pow(Half h) { return u_pow(h.tw); }

  const Laurent<Rat>& num() const { return num_; }
  const Poly<Rat>& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const {
    return num_.lo == 0 && num_.c.size() == 1 && num_.c[0] == Rat(1) &&
           den_.degree() == 0;
  }

  friend bool operator==(const QValue& a, const QValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QValue& a, const QValue& b) { return !(a == b); }

  friend QValue operator+(const QValue& a, const QValue& b) {
    Laurent<Rat> bden = Laurent<Rat>::from_poly(b.den_);
    Laurent<Rat> aden = Laurent<Rat>::from_poly(a.den_);
    return QValue(a.num_ * bden + b.num_ * aden, aden * bden);
  }
  friend QValue operator-(const QValue& a) {
    QValue r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend QValue operator-(const QValue& a, const QValue& b) { return a + (-b); }
  friend QValue operator*(const QValue& a, const QValue& b) {
    return QValue(a.num_ * b.num_,
                  Laurent<Rat>::from_poly(a.den_) * Laurent<Rat>::from_poly(b.den_));
  }
  friend QValue operator/(const QValue& a, const QValue& b) { return a * b.inv(); }

  QValue inv() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return QValue(Laurent<Rat>::from_poly(den_), num_);
  }

  QValue pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QValue acc(1), base = *this;
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  /// Exact value at a concrete residue size q0 > 1. Works in Q(sqrt(q0));
  /// a result outside Q is refused.
  Rat eval_at_q(const Rat& q0) const {
    if (q0 <= 1) throw std::domain_error("residue size must exceed 1");
    Rat root;
    if (rat_sqrt(q0, root)) {
      Rat d = eval_laurent_rat(Laurent<Rat>::from_poly(den_), root);
      if (d == 0) throw std::domain_error("pole at the requested residue size");
      return eval_laurent_rat(num_, root) / d;
    }
    // x + y*w with w^2 = q0, w irrational.
    auto [na, nb] = eval_quadratic(num_, q0);
    auto [da, db] = eval_quadratic(Laurent<Rat>::from_poly(den_), q0);
    Rat norm = da * da - db * db * q0;
    if (norm == 0) throw std::domain_error("pole at the requested residue size");
    Rat x = (na * da - nb * db * q0) / norm;
    Rat y = (nb * da - na * db) / norm;
    if (y != 0) throw std::domain_error("irrational evaluation");
    return x;
  }

  /// Canonical textual form: monomials "c*q^(k/2)" in decreasing k, with the
  /// denominator (when not 1) in "(num) / (den)" shape.
  std::string str() const {
    if (is_zero()) return "0";
    std::string n = laurent_str(num_);
    if (den_.degree() == 0) return n;
    return "(" + n + ") / (" + laurent_str(Laurent<Rat>::from_poly(den_)) + ")";
  }

  static std::string laurent_str(const Laurent<Rat>& l) {
    if (l.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = l.hi(); e >= l.lo; --e) {
      Rat c = l.at(e);
      if (c == 0) continue;
      if (!first) os << " + ";
      os << rat_str(c) << "*q^(" << e << "/2)";
      first = false;
    }
    return os.str();
  }

 private:
  static Rat eval_laurent_rat(const Laurent<Rat>& l, const Rat& x) {
    Rat acc(0);
    for (size_t i = 0; i < l.c.size(); ++i)
      acc += l.c[i] * rat_pow(x, l.lo + static_cast<long>(i));
    return acc;
  }

  // Value as x + y*w with w = sqrt(q0) formal: even u-exponents feed x,
  // odd ones feed y (u^(2j+1) = q0^j * w).
  static std::pair<Rat, Rat> eval_quadratic(const Laurent<Rat>& l, const Rat& q0) {
    Rat x(0), y(0);
    for (size_t i = 0; i < l.c.size(); ++i) {
      long e = l.lo + static_cast<long>(i);
      if (e % 2 == 0) {
        x += l.c[i] * rat_pow(q0, e / 2);
      } else {
        y += l.c[i] * rat_pow(q0, (e - 1) / 2);  // e odd, so e-1 halves exactly
      }
    }
    return {x, y};
  }

  Laurent<Rat> num_;              // Laurent in u, poly part has nonzero constant term
  Poly<Rat> den_ = Poly<Rat>::one();  // monic, nonzero constant term, coprime to num
};

/// Canonical forms are maintained by construction; exposed for the
/// idempotence contract.
inline QValue canonicalize(const QValue& x) { return x; }

}  // namespace qlc

#endif  // QLC_QVALUE_HPP
