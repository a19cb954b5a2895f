#ifndef QLC_DOUBLING_HPP
#define QLC_DOUBLING_HPP

#include <vector>

#include "qlc/abelian.hpp"
#include "qlc/cvalue.hpp"
#include "qlc/localdata.hpp"
#include "qlc/volumes.hpp"

namespace qlc {

// Auxiliary form datum entering the intertwining constant: the valuation of
// the norm of its Gram class and its discriminant character.
struct ADatum {
  long norm_val = 0;
  QuadraticCharacter chi_A = QuadraticCharacter::trivial();
};

// omega_s(N(A))^(-1) for |N(A)| = q^(-d). Unramified omega sees only the
// uniformizer part; a ramified twist would need the unit class of the norm,
// which is not part of the datum, so it is only accepted at d = 0.
inline CValue omega_s_norm_inverse(const QuadraticCharacter& omega, long d) {
  if (d == 0) return CValue(1);
  if (omega.is_ramified())
    throw std::domain_error(
        "a ramified twist needs a unit norm class for its value to be "
        "determined");
  int sgn = (d % 2 != 0 && omega.at_uniformizer() < 0) ? -1 : 1;
  return CValue(SValue(sgn) * SValue::x_pow(-d));
}

// The normalizing constant c(s, omega, A, psi) of the intertwining
// functional. omega_four is omega(4) for even residue characteristic; at
// e = 0 the value is 1 because 4 is the square of a unit.
inline CValue c_factor(const QuadraticCharacter& omega, const ADatum& A,
                       const HermitianSpace& w, int omega_four = +1) {
  long n = w.n, e = w.field.e;
  CValue acc(kottwitz_sign(w));
  acc = acc * omega_s_norm_inverse(omega, A.norm_val);
  // |2|^(-2ns + n(n - 1/2))
  acc = acc * CValue(SValue::q_lin({2 * e * n, half_of(-e * n * (2 * n - 1))}));
  if (e > 0) acc = acc * CValue(omega_four);  // omega(4)^(-1), self-inverse
  QuadraticCharacter omega_sq = omega * omega;
  if (n > 0)
    acc = acc * gamma_product(n, {2, half_int(0)}, half_int(-2), omega_sq).inv();
  if (w.form_sign == +1) {
    acc = acc * gamma_factor({1, half_of(1 - 2 * n)}, omega).inv();
    acc = acc * gamma_factor({1, half_of(1)}, omega * A.chi_A);
    acc = acc * epsilon_at_half(A.chi_A).inv();
  }
  return acc;
}

// The part of c(s, omega, A, psi) that changes with the form datum: the
// quotient c(R A) / c(A) evaluated on the Gram class R of the space.
inline CValue R_factor(const QuadraticCharacter& omega, const ADatum& A,
                       const HermitianSpace& w) {
  CValue acc = omega_s_norm_inverse(omega, w.gram_val + A.norm_val);
  if (w.form_sign == +1) {
    acc = acc * gamma_factor({1, half_of(1)}, omega * A.chi_A);
    acc = acc * epsilon_at_half(A.chi_A).inv();
  } else {
    acc = acc * epsilon_at_half(w.chi);
  }
  return acc;
}

// gamma^W(sigma, 1 x 1, psi): the doubling gamma factor of the trivial
// representation, as a product of abelian factors.
inline CValue gamma_doubling_trivial(SLin sigma, const HermitianSpace& w) {
  QuadraticCharacter triv = QuadraticCharacter::trivial();
  if (w.form_sign == +1)
    return gamma_product(2 * w.n + 1, sigma + half_int(-w.n), half_int(1), triv);
  CValue acc = gamma_factor(sigma, w.chi);
  if (w.n > 0)
    acc = acc * gamma_product(2 * w.n - 1, sigma + half_int(-w.n + 1),
                              half_int(1), triv);
  return acc;
}

// The proportionality factor m°(s) between the two normalized sections, for
// the rank-n group on the side of sign form_sign_w over a field with
// ord(2) = e.
inline SValue m_circ(int form_sign_w, long n, long e) {
  if (n == 0) return SValue(1);
  // |2|^(n(n - 1/2))
  SValue acc = SValue::q_lin({0, half_of(-e * n * (2 * n - 1))});
  if (form_sign_w == +1) {
    acc = acc * SValue::q_lin({0, half_int(-n * (n + 1) / 2)});
    acc = acc * zeta({1, half_of(1 - 2 * n)}) / zeta({1, half_of(2 * n + 1)});
    for (long i = 0; i < n; ++i)
      acc = acc * zeta({2, half_int(-2 * i)}) /
            zeta({2, half_int(2 * n - 4 * i - 3)});
  } else {
    acc = acc * SValue::q_lin({0, half_int(-n * (n - 1) / 2)});
    for (long i = 0; i < n; ++i)
      acc = acc * zeta({2, half_int(-2 * i)}) /
            zeta({2, half_int(2 * n - 4 * i - 1)});
  }
  return acc;
}

// Denominator d^W(s) of the unramified doubling zeta integral.
inline SValue d_W(const HermitianSpace& w) {
  if (w.field.e != 0)
    throw std::domain_error(
        "the unramified zeta integral assumes odd residue characteristic");
  long n = w.n;
  if (w.form_sign == +1) {
    SValue acc = zeta({1, half_of(2 * n + 1)});
    for (long i = 1; i <= n / 2; ++i)
      acc = acc * zeta({2, half_int(2 * n + 1 - 4 * i)});
    return acc;
  }
  SValue acc(1);
  for (long i = 1; i <= (n + 1) / 2; ++i)
    acc = acc * zeta({2, half_int(2 * n + 3 - 4 * i)});
  return acc;
}

// Monic self-reciprocal numerator polynomial S(T) of the zeta integral,
// with coefficients listed from the constant term up.
struct SelfReciprocalPoly {
  std::vector<QValue> c;

  long degree() const { return static_cast<long>(c.size()) - 1; }
  bool is_monic() const { return !c.empty() && c.back() == QValue(1); }
  bool is_self_reciprocal() const {
    if (c.empty()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!(c[i] == c[c.size() - 1 - i])) return false;
    return true;
  }
  // S(q^(-s)) as an exact value in s.
  SValue at_q_minus_s() const {
    SValue acc(0);
    for (std::size_t i = 0; i < c.size(); ++i)
      acc = acc + SValue(c[i]) * SValue::x_pow(static_cast<long>(i));
    return acc;
  }
};

inline SelfReciprocalPoly S_poly(const HermitianSpace& w) {
  if (w.form_sign == -1 && w.n0 == 2 && !w.chi.is_ramified()) {
    QValue mid = QValue::u_pow(1) + QValue::u_pow(-1);
    return {{QValue(1), mid, QValue(1)}};
  }
  return {{QValue(1)}};
}

// L-factor of the anisotropic kernel at sigma = s + 1/2.
inline SValue kernel_L(const HermitianSpace& w) {
  SLin sg{1, half_of(1)};
  if (w.form_sign == +1)
    return w.n0 == 0 ? zeta(sg) : zeta(sg + half_int(1));
  switch (w.n0) {
    case 0:
      return SValue(1);
    case 1:
      return w.chi.is_ramified() ? zeta(sg) : zeta({2, half_of(2)});
    case 2: {
      SValue z = zeta(sg + half_int(1));
      if (w.chi.is_ramified()) return z;
      return z / (SValue(1) + SValue::q_lin({-1, half_of(-1)}));
    }
    default:
      return zeta(sg) * zeta(sg + half_int(2));
  }
}

// The unramified doubling zeta integral Z(f_s°, xi°) in closed form:
// |C_1| * S(q^(-s)) * L-factor of the kernel * one abelian zeta per
// hyperbolic plane, over d^W(s). One GL_1(D) shift per plane is required.
inline SValue zeta_integral_unramified(const HermitianSpace& w,
                                       const std::vector<Half>& sigma_shifts) {
  if (w.field.e != 0)
    throw std::domain_error(
        "the unramified zeta integral assumes odd residue characteristic");
  if (static_cast<long>(sigma_shifts.size()) != w.r())
    throw std::invalid_argument(
        "one GL_1(D) shift per hyperbolic plane is required");
  SValue acc = SValue(C1_volume(w)) * S_poly(w).at_q_minus_s() * kernel_L(w);
  for (Half sh : sigma_shifts) acc = acc * zeta({1, sh + half_int(1)});
  return acc / d_W(w);
}

enum class Alpha1Method {
  ClosedUnimodular,
  ClosedAnisotropic,
  ClosedGeneral,
  FunctionalEquation
};

// alpha_1(W): the doubling zeta value at the edge point rho(W).
inline QValue alpha1(const HermitianSpace& w, Alpha1Method method) {
  long n = w.n, e = w.field.e, v = w.gram_val, r = w.r();
  switch (method) {
    case Alpha1Method::ClosedUnimodular: {
      if (v != 0)
        throw std::domain_error(
            "the unimodular closed form assumes a unimodular Gram class");
      if (w.form_sign == -1 && w.n0 >= 2)
        throw std::domain_error(
            "the unimodular closed form needs an unramified kernel of "
            "dimension at most one");
      if (w.form_sign == -1 && w.n0 == 1 && w.chi.is_ramified())
        throw std::domain_error(
            "the unimodular closed form needs an unramified kernel of "
            "dimension at most one");
      long n0 = w.n0;
      QValue acc = prod_one_plus_odd(n);
      if (w.form_sign == +1)
        return abs2_pow(e, half_int(n * (2 * n + 1))) *
               q_int_pow(-n0 * n0 - (2 * n0 + 1) * r - 2 * r * r) * acc;
      return abs2_pow(e, half_int(n * (2 * n - 1))) *
             q_int_pow(-2 * r * n0 - 2 * r * r + r) * acc;
    }
    case Alpha1Method::ClosedGeneral: {
      if (w.form_sign != -1)
        throw std::domain_error("the general closed form is for the -1 side");
      long fl = n / 2, ce = (n + 1) / 2;
      return abs2_pow(e, half_int(n * (2 * n - 1))) *
             QValue::u_pow(v * (2 * n - 1)) *
             q_int_pow(-(2 * fl * ce - fl)) * prod_one_plus_odd(n);
    }
    case Alpha1Method::ClosedAnisotropic: {
      if (w.form_sign != -1 || r != 0)
        throw std::domain_error(
            "the anisotropic closed form needs an anisotropic -1-side space");
      QValue pre = QValue::u_pow(v * (2 * n - 1));
      switch (n) {
        case 0:
          return QValue(1);
        case 1:
          return pre * abs2_pow(e, half_int(1)) * prod_one_plus_odd(1);
        case 2:
          return pre * abs2_pow(e, half_int(6)) * q_int_pow(-1) *
                 (QValue(1) + q_int_pow(-1)) * (QValue(1) + q_int_pow(-3));
        default:
          return pre * abs2_pow(e, half_int(15)) * q_int_pow(-3) *
                 prod_one_plus_odd(3);
      }
    }
    case Alpha1Method::FunctionalEquation:
    default: {
      if (w.form_sign != -1 || r != 0)
        throw std::domain_error(
            "the functional-equation path needs an anisotropic -1-side "
            "space");
      if (n == 0) return QValue(1);
      Half rho_w = rho(w);  // n - 1/2
      QuadraticCharacter triv = QuadraticCharacter::trivial();
      CValue acc(m_circ(-1, n, e));
      acc = acc * gamma_doubling_trivial({1, half_of(1)}, w).inv();
      acc = acc * gamma_product(n, {2, half_int(0)}, half_int(-2), triv);
      // |2|^(2n s - n(n - 1/2)) at symbolic s, and |N|^(-s) = q^(v s).
      acc = acc * CValue(SValue::q_lin({-2 * e * n, half_of(e * n * (2 * n - 1))}));
      acc = acc * CValue(SValue::q_lin({v, half_int(0)}));
      acc = acc * epsilon_at_half(w.chi);
      acc = acc * CValue(kottwitz_sign(w)) * CValue(group_volume_anisotropic(w));
      CResult res = acc.substitute_s(rho_w);
      if (res.is_pole)
        throw std::domain_error("the functional equation degenerates here");
      if (!res.value.word().empty())
        throw std::domain_error("root-number symbols failed to cancel");
      return res.value.scalar().as_qvalue();
    }
  }
}

}  // namespace qlc

#endif  // QLC_DOUBLING_HPP
