#ifndef QLC_LOCALDATA_HPP
#define QLC_LOCALDATA_HPP

#include <stdexcept>
#include <string>

#include "qlc/half.hpp"

namespace qlc {

// Residue-field data of the base field F. Only e = ord(2) enters formulas:
// |2|_F = q^-e, so e = 0 is the odd-residue-characteristic case.
struct FieldParams {
  long e = 0;

  FieldParams() = default;
  explicit FieldParams(long ord2) : e(ord2) {
    if (e < 0) throw std::domain_error("ord(2) must be nonnegative");
  }

  bool operator==(const FieldParams&) const = default;
};

enum class CharKind { Trivial, UnramifiedNontrivial, Ramified };

// Quadratic character of F^x, tracked by kind, value at -1, conductor
// exponent a, and (in the ramified case) a possible extra unramified twist.
// The twist shares the root-number symbol of the underlying character and
// contributes only the scalar (-1)^a to epsilon and gamma factors.
struct QuadraticCharacter {
  CharKind kind = CharKind::Trivial;
  int sign_at_minus_one = +1;
  long a = 0;           // conductor exponent; 0 iff unramified
  int unram_twist = 0;  // 0 or 1; meaningful only for ramified characters

  static QuadraticCharacter trivial() { return {}; }

  static QuadraticCharacter unramified_nontrivial() {
    QuadraticCharacter c;
    c.kind = CharKind::UnramifiedNontrivial;
    return c;
  }

  static QuadraticCharacter ramified(int sign, long conductor, int twist = 0) {
    if (conductor < 1)
      throw std::domain_error("ramified character needs conductor >= 1");
    if (sign != 1 && sign != -1)
      throw std::domain_error("character sign at -1 must be +1 or -1");
    if (twist != 0 && twist != 1)
      throw std::domain_error("unramified twist flag must be 0 or 1");
    QuadraticCharacter c;
    c.kind = CharKind::Ramified;
    c.sign_at_minus_one = sign;
    c.a = conductor;
    c.unram_twist = twist;
    return c;
  }

  bool is_trivial() const { return kind == CharKind::Trivial; }
  bool is_unramified() const { return kind != CharKind::Ramified; }
  bool is_ramified() const { return kind == CharKind::Ramified; }

  // Value at a uniformizer: defined (=+-1) only for unramified characters.
  int at_uniformizer() const {
    switch (kind) {
      case CharKind::Trivial:
        return +1;
      case CharKind::UnramifiedNontrivial:
        return -1;
      case CharKind::Ramified:
        throw std::domain_error(
            "value at a uniformizer depends on the choice for a ramified "
            "character");
    }
    throw std::logic_error("unreachable");
  }

  int at_minus_one() const { return sign_at_minus_one; }

  // Identifier of the root-number symbol eps(chi); ramified only.
  std::string symbol_id() const {
    if (!is_ramified())
      throw std::domain_error("only ramified characters carry a root-number symbol");
    return std::string("ram") + (sign_at_minus_one > 0 ? "+" : "-") + ".a" +
           std::to_string(a);
  }

  bool operator==(const QuadraticCharacter&) const = default;
};

// Product of two quadratic characters.  Ramified characters multiply only
// against their own twist family or unramified characters; a product of two
// ramified characters with distinct (sign, a) is not quadratic data we track.
inline QuadraticCharacter operator*(const QuadraticCharacter& x,
                                    const QuadraticCharacter& y) {
  if (x.is_trivial()) return y;
  if (y.is_trivial()) return x;
  if (x.kind == CharKind::UnramifiedNontrivial &&
      y.kind == CharKind::UnramifiedNontrivial)
    return QuadraticCharacter::trivial();
  if (x.kind == CharKind::UnramifiedNontrivial && y.is_ramified())
    return QuadraticCharacter::ramified(y.sign_at_minus_one, y.a,
                                        1 - y.unram_twist);
  if (x.is_ramified() && y.kind == CharKind::UnramifiedNontrivial)
    return QuadraticCharacter::ramified(x.sign_at_minus_one, x.a,
                                        1 - x.unram_twist);
  // Both ramified.
  if (x.sign_at_minus_one == y.sign_at_minus_one && x.a == y.a) {
    if (x.unram_twist == y.unram_twist) return QuadraticCharacter::trivial();
    return QuadraticCharacter::unramified_nontrivial();
  }
  throw std::domain_error(
      "product of ramified characters from different families is not "
      "supported");
}

// epsilon-hermitian space over the quaternion division algebra D.
//
//   form_sign : +1 (hermitian) or -1 (skew-hermitian)
//   n         : dimension over D
//   n0        : dimension of the anisotropic kernel, r = (n - n0)/2
//   chi       : discriminant-type quadratic character attached to the space
//   gram_val  : v with |N(Gram of the kernel part)| = q^-v (normalization of
//               the chosen base point; 0 for a unimodular/self-dual lattice)
struct HermitianSpace {
  int form_sign = +1;
  long n = 0;
  long n0 = 0;
  QuadraticCharacter chi;
  long gram_val = 0;
  FieldParams field;

  long r() const { return (n - n0) / 2; }

  bool operator==(const HermitianSpace&) const = default;
};

// Classification of anisotropic kernels:
//   +1 side: n0 = n mod 2 and chi is forced trivial.
//   -1 side: n0 in {0,1,2,3} determined by (n mod 2, chi nontrivial?):
//            n0=0 <-> (even, trivial),   n0=1 <-> (odd, nontrivial),
//            n0=2 <-> (even, nontrivial), n0=3 <-> (odd, trivial), n>0.
inline long kernel_dimension(int form_sign, long n,
                             const QuadraticCharacter& chi) {
  if (form_sign == +1) {
    if (!chi.is_trivial())
      throw std::domain_error(
          "hermitian spaces on the +1 side carry the trivial character");
    return n % 2;
  }
  if (n == 0) {
    if (!chi.is_trivial())
      throw std::domain_error("the zero space carries the trivial character");
    return 0;
  }
  bool odd = (n % 2 != 0);
  bool nontrivial = !chi.is_trivial();
  long n0 = !odd ? (nontrivial ? 2 : 0) : (nontrivial ? 1 : 3);
  if (n0 > n)
    throw std::domain_error(
        "no such space: the anisotropic kernel would exceed the dimension");
  return n0;
}

inline HermitianSpace make_space(int form_sign, long n,
                                 const QuadraticCharacter& chi,
                                 long gram_val = 0,
                                 FieldParams field = FieldParams{}) {
  if (form_sign != +1 && form_sign != -1)
    throw std::domain_error("form sign must be +1 or -1");
  if (n < 0) throw std::domain_error("dimension must be nonnegative");
  HermitianSpace w;
  w.form_sign = form_sign;
  w.n = n;
  w.chi = chi;
  w.n0 = kernel_dimension(form_sign, n, chi);
  w.gram_val = gram_val;
  w.field = field;
  if ((w.n - w.n0) % 2 != 0 || w.r() < 0)
    throw std::logic_error("invalid Witt decomposition");
  return w;
}

// rho(W) = n + form_sign/2, the point of the doubling functional equation.
inline Half rho(const HermitianSpace& w) {
  return half_of(2 * w.n + w.form_sign);
}

// Dual pair (W, V): W sits on the -epsilon side (dim n), V on the epsilon
// side (dim m).  Almost equal rank l = 2n - 2m - epsilon = 1 pins
// m = n - (1+epsilon)/2.
struct DualPair {
  int epsilon = +1;  // sign of the V side
  HermitianSpace w;  // the -epsilon side, dimension n
  HermitianSpace v;  // the epsilon side, dimension m
};

inline long companion_dimension(int epsilon, long n) {
  long m = n - (1 + epsilon) / 2;
  if (m < 0) throw std::domain_error("no almost-equal-rank companion");
  return m;
}

inline DualPair make_pair(int epsilon, const HermitianSpace& w,
                          const QuadraticCharacter& chi_v, long gram_val_v = 0) {
  if (epsilon != +1 && epsilon != -1)
    throw std::domain_error("epsilon must be +1 or -1");
  if (w.form_sign != -epsilon)
    throw std::domain_error("W must sit on the -epsilon side");
  DualPair p;
  p.epsilon = epsilon;
  p.w = w;
  p.v = make_space(epsilon, companion_dimension(epsilon, w.n), chi_v,
                   gram_val_v, w.field);
  return p;
}

// Conservation: dims of the two companions of W differ by the full defect,
// m + m^dagger = 2n + 2 - epsilon, where m is the almost-equal-rank dim.
inline bool conservation_check(int epsilon, long n, long m, long m_dagger) {
  return m + m_dagger == 2 * n + 2 - epsilon;
}

inline long conservation_partner(int epsilon, long n, long m) {
  long md = 2 * n + 2 - epsilon - m;
  if (md < 0) throw std::domain_error("conservation partner has negative dimension");
  return md;
}

// Point of a Witt tower: dimension m0 + 2t above the anisotropic base m0.
struct WittTowerPoint {
  long m0 = 0;
  long t = 0;

  long dim() const { return m0 + 2 * t; }
};

}  // namespace qlc

#endif  // QLC_LOCALDATA_HPP
