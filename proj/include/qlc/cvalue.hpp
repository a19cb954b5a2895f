#ifndef QLC_CVALUE_HPP
#define QLC_CVALUE_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qlc/svalue.hpp"

namespace qlc {

/// One opaque root-number symbol eps(id). Its square is the sign chi(-1) of
/// the quadratic character it belongs to, so reduced words keep exponents in
/// {0,1} and eps^(-1) = sign * eps.
struct EpsUnit {
  int exp = 0;   // 0 or 1 after reduction
  int sign = 1;  // chi(-1)

  friend bool operator==(const EpsUnit& a, const EpsUnit& b) {
    return a.exp == b.exp && a.sign == b.sign;
  }
};

struct CResult;

/// Scalar from Q(u)(X) times a reduced word in root-number symbols.
/// Equality is taken in the quotient ring where eps(id)^2 = sign(id).
class CValue {
 public:
  CValue() = default;
  CValue(long n) : scalar_(n) {}
  CValue(const Rat& r) : scalar_(r) {}
  CValue(const QValue& q) : scalar_(q) {}
  CValue(const SValue& s) : scalar_(s) {}

  /// The bare symbol eps(id) with eps^2 = sign.
  static CValue eps(const std::string& id, int sign) {
    CValue c(1);
    c.word_[id] = {1, sign};
    return c;
  }

  const SValue& scalar() const { return scalar_; }
  const std::map<std::string, EpsUnit>& word() const { return word_; }
  bool is_zero() const { return scalar_.is_zero(); }

  friend bool operator==(const CValue& a, const CValue& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.scalar_ == b.scalar_ && a.word_ == b.word_;
  }
  friend bool operator!=(const CValue& a, const CValue& b) { return !(a == b); }

  friend CValue operator*(const CValue& a, const CValue& b) {
    CValue r;
    r.scalar_ = a.scalar_ * b.scalar_;
    r.word_ = a.word_;
    for (const auto& [id, unit] : b.word_) {
      auto it = r.word_.find(id);
      if (it == r.word_.end()) {
        if (unit.exp) r.word_[id] = unit;
        continue;
      }
      if (it->second.sign != unit.sign)
        throw std::domain_error("inconsistent sign for symbol " + id);
      int e = it->second.exp + unit.exp;
      if (e >= 2) {
        e -= 2;
        r.scalar_ = r.scalar_ * SValue(unit.sign);
      }
      if (e == 0)
        r.word_.erase(it);
      else
        it->second.exp = e;
    }
    if (r.scalar_.is_zero()) r.word_.clear();
    return r;
  }

  friend CValue operator+(const CValue& a, const CValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.word_ != b.word_)
      throw std::domain_error("sum of values with different symbol words");
    CValue r = a;
    r.scalar_ = a.scalar_ + b.scalar_;
    if (r.scalar_.is_zero()) r.word_.clear();
    return r;
  }
  friend CValue operator-(const CValue& a) { return a * CValue(-1); }
  friend CValue operator-(const CValue& a, const CValue& b) { return a + (-b); }
  friend CValue operator/(const CValue& a, const CValue& b) { return a * b.inv(); }

  /// Inverse in the quotient ring: each symbol satisfies
  /// eps^(-1) = sign * eps, so the word survives and the scalar picks up the
  /// product of signs.
  CValue inv() const {
    CValue r;
    long sign = 1;
    for (const auto& [id, unit] : word_)
      if (unit.exp) sign *= unit.sign;
    r.scalar_ = scalar_.inv() * SValue(sign);
    r.word_ = word_;
    return r;
  }

  CValue pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CValue acc(1), base = *this;
    for (long i = 0; i < e; ++i) acc = acc * base;
    return acc;
  }

  CResult substitute_s(Half s0) const;

  /// Exact numeric value at residue size q0. Every symbol still present must
  /// be given a rational value consistent with its square; a symbol with
  /// eps^2 = -1 has no such value and is refused.
  Rat evaluate_numeric(const Rat& q0,
                       const std::map<std::string, Rat>& unit_values = {}) const {
    Rat acc = scalar_.as_qvalue().eval_at_q(q0);
    for (const auto& [id, unit] : word_) {
      if (!unit.exp) continue;
      if (unit.sign < 0)
        throw std::domain_error("irrational evaluation: eps(" + id +
                                ") squares to -1");
      auto it = unit_values.find(id);
      if (it == unit_values.end())
        throw std::domain_error("missing unit value for eps(" + id + ")");
      if (it->second * it->second != Rat(unit.sign))
        throw std::domain_error("unit value for eps(" + id +
                                ") does not square to its sign");
      acc *= it->second;
    }
    return acc;
  }

  /// Scalar in canonical textual form, then " * eps(id)" suffixes in id
  /// order.
  std::string str() const {
    std::string out = scalar_.str();
    for (const auto& [id, unit] : word_)
      if (unit.exp) out += " * eps(" + id + ")";
    return out;
  }

 private:
  SValue scalar_;
  std::map<std::string, EpsUnit> word_;
};

/// Result of specializing s in a CValue: either a genuine pole or a value.
struct CResult {
  bool is_pole = false;
  Half at{0};
  CValue value;

  std::string str() const {
    if (is_pole) {
      std::ostringstream os;
      os << "pole at s = " << at.tw << "/2";
      return os.str();
    }
    return value.str();
  }
};

inline CResult CValue::substitute_s(Half s0) const {
  QResult q = scalar_.substitute_s(s0);
  if (q.is_pole) return {true, s0, CValue(0)};
  CValue r(q.value);
  r.word_ = q.value.is_zero() ? std::map<std::string, EpsUnit>{} : word_;
  return {false, s0, r};
}

inline CValue canonicalize(const CValue& x) { return x; }

inline CResult substitute_s(const CValue& x, Half s0) {
  return x.substitute_s(s0);
}

}  // namespace qlc

#endif  // QLC_CVALUE_HPP
