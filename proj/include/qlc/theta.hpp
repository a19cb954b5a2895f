#ifndef QLC_THETA_HPP
#define QLC_THETA_HPP

#include <cstdlib>

#include "qlc/doubling.hpp"

namespace qlc {

enum class Alpha2Method { Closed, AnisotropicTable, ViaAlpha1, IwahoriSum };
enum class Alpha3Method { Closed, ViaAlpha2 };

// Constant ratio prod_{i=1}^{n-1} zeta_F(1-2i)/zeta_F(2i).
inline QValue zeta_ratio_product(long n) {
  QValue acc(1);
  for (long i = 1; i <= n - 1; ++i)
    acc = acc * zeta_const(half_int(1 - 2 * i)) / zeta_const(half_int(2 * i));
  return acc;
}

inline int sign_pow(int sign, long e) { return (sign < 0 && e % 2) ? -1 : 1; }

// Closed form of the normalized Iwahori-orbit theta sum on the pair of a
// split plane with the three-dimensional anisotropic space.
inline QValue iwahori_theta_sum() {
  return q_int_pow(-2) * (QValue(1) - q_int_pow(-2)) *
         (QValue(1) + q_int_pow(-2)) * (QValue(1) + q_int_pow(-5)) /
         (QValue(1) - q_int_pow(-3));
}

// The same sum truncated to orbit parameters |t| <= tmax, evaluated exactly
// at residue size q0: |B| * sum of q0^(-3|t|) + q0^(-6|t-1| + |1-3t|).
inline Rat iwahori_theta_sum_truncated(long tmax, const Rat& q0) {
  if (tmax < 0) throw std::invalid_argument("the truncation bound must be >= 0");
  auto qp = [&](long k) { return rat_pow(q0, k); };
  Rat cell = qp(-4) * (Rat(1) - qp(-2));
  Rat acc = 0;
  for (long t = -tmax; t <= tmax; ++t)
    acc += qp(-3 * std::labs(t)) + qp(-6 * std::labs(t - 1) + std::labs(1 - 3 * t));
  return cell * acc;
}

// alpha_2(V, W): the value of the normalized theta integral on the trivial
// representation of the dual pair.
inline CValue alpha2(const DualPair& pair, Alpha2Method method) {
  const HermitianSpace& w = pair.w;
  const HermitianSpace& v = pair.v;
  long n = w.n, m = v.n, e = w.field.e, gv = w.gram_val;
  Half rho_w = rho(w);
  switch (method) {
    case Alpha2Method::Closed: {
      if (w.form_sign == +1 && n == 0)
        throw std::domain_error(
            "the closed form needs a positive-dimensional space on this "
            "side");
      CValue acc(kottwitz_sign(w));
      // |2|^(-2n rho + n(n - 1/2)) and |N(R)|^rho = q^(-v rho)
      acc = acc * CValue(abs2_pow(e, half_of(n * (-2 * n - 2 * w.form_sign - 1))));
      acc = acc * CValue(QValue::u_pow(-gv * rho_w.tw));
      acc = acc * CValue(zeta_ratio_product(n));
      if (w.form_sign == +1) {
        acc = acc * CValue(2 * sign_pow(v.chi.at_minus_one(), n));
        acc = acc * gamma_factor({0, half_int(1 - n)}, v.chi).inv();
        acc = acc * epsilon_at_half(v.chi);
      }
      return acc;
    }
    case Alpha2Method::AnisotropicTable: {
      if (w.form_sign == +1) {
        if (v.r() != 0 || m < 1 || m > 3)
          throw std::domain_error(
              "the table covers anisotropic companions of dimension 1 to 3");
        if (v.chi.is_ramified() && v.chi.a != 1)
          throw std::domain_error(
              "the table is stated for tamely ramified characters");
        CValue pre(QValue::u_pow(-gv * (2 * n + 1)) *
                   QValue(sign_pow(v.chi.at_minus_one(), n)));
        bool ram = v.chi.is_ramified();
        QValue body;
        switch (m) {
          case 1:
            body = ram ? QValue(-2) * abs2_pow(e, half_of(-5)) * QValue::u_pow(-1)
                       : QValue(-1) * abs2_pow(e, half_of(-5)) *
                             (QValue(1) + q_int_pow(-1));
            break;
          case 2:
            body = ram ? QValue(2) * abs2_pow(e, half_of(-14)) * QValue::u_pow(-5) *
                             (QValue(1) + q_int_pow(-1))
                       : QValue(2) * abs2_pow(e, half_of(-14)) * q_int_pow(-2) *
                             (QValue(1) + q_int_pow(-2));
            break;
          default:
            body = QValue(-2) * abs2_pow(e, half_of(-27)) * q_int_pow(-6) *
                   (QValue(1) + q_int_pow(-1)) * (QValue(1) + q_int_pow(-2));
            break;
        }
        return pre * CValue(body);
      }
      if (n > 3 || (n == 3 && w.n0 != 3))
        throw std::domain_error(
            "the table needs dimension at most two or the anisotropic "
            "three-dimensional class");
      QValue pre = QValue::u_pow(-gv * (2 * n - 1));
      QValue body;
      switch (n) {
        case 0:
          body = QValue(1);
          break;
        case 1:
          body = abs2_pow(e, half_of(-1));
          break;
        case 2:
          body = abs2_pow(e, half_of(-6)) * q_int_pow(-1) *
                 (QValue(1) + q_int_pow(-1));
          break;
        default:
          body = QValue(-1) * abs2_pow(e, half_of(-15)) * q_int_pow(-4) *
                 (QValue(1) + q_int_pow(-1)) *
                 (QValue(1) - q_int_pow(-4)) /
                 (QValue(1) - q_int_pow(-3));
          break;
      }
      return CValue(pre * body);
    }
    case Alpha2Method::ViaAlpha1: {
      if (v.r() != 0)
        throw std::domain_error(
            "the volume path needs an anisotropic companion");
      QValue a1;
      if (w.form_sign == -1) {
        a1 = alpha1(w, Alpha1Method::ClosedGeneral);
      } else {
        HermitianSpace w0 = make_space(+1, n, w.chi, 0, w.field);
        a1 = QValue::u_pow(gv * rho_w.tw) *
             alpha1(w0, Alpha1Method::ClosedUnimodular);
      }
      QResult mr = m_circ(w.form_sign, n, e).substitute_s(rho_w);
      if (mr.is_pole)
        throw std::domain_error(
            "the proportionality factor degenerates at the edge point");
      int sgn = sign_pow(-1, m * n) * sign_pow(v.chi.at_minus_one(), n);
      return CValue(QValue(sgn) * group_volume_anisotropic(v) * mr.value / a1);
    }
    case Alpha2Method::IwahoriSum:
    default: {
      if (pair.epsilon != +1 || v.n != 2 || v.n0 != 0 || w.n != 3 || w.n0 != 3)
        throw std::domain_error(
            "the orbit sum is worked out for the split plane paired with "
            "the three-dimensional anisotropic space");
      QResult mr = m_circ(-1, 3, e).substitute_s(half_of(1));
      if (mr.is_pole)
        throw std::domain_error(
            "the proportionality factor degenerates at the theta point");
      QValue a1 = alpha1(w, Alpha1Method::ClosedGeneral);
      return CValue(iwahori_theta_sum() * mr.value / a1);
    }
  }
}

// alpha_3(V, W): the constant relating the two normalizations of the theta
// integral.
inline CValue alpha3(const DualPair& pair, Alpha3Method method) {
  const HermitianSpace& w = pair.w;
  const HermitianSpace& v = pair.v;
  long n = w.n, m = v.n, e = w.field.e, gv = w.gram_val;
  Half rho_w = rho(w);
  if (method == Alpha3Method::Closed) {
    if (w.form_sign == +1) return epsilon_at_half(v.chi).inv();
    return CValue(rat(sign_pow(w.chi.at_minus_one(), m), 2)) *
           epsilon_at_half(w.chi).inv();
  }
  CValue acc = alpha2(pair, Alpha2Method::Closed) * CValue(rat(1, 2));
  acc = acc * CValue(kottwitz_sign(w));
  // |2|^(2n rho - n(n - 1/2)) and q^(v rho)
  acc = acc * CValue(abs2_pow(e, half_of(n * (2 * n + 2 * w.form_sign + 1))));
  acc = acc * CValue(QValue::u_pow(gv * rho_w.tw));
  acc = acc * CValue(zeta_ratio_product(n).inv());
  if (w.form_sign == +1) {
    acc = acc * CValue(sign_pow(v.chi.at_minus_one(), n + 1));
    acc = acc * gamma_factor({0, half_int(1 - n)}, v.chi);
  } else {
    acc = acc * CValue(sign_pow(w.chi.at_minus_one(), m + 1));
    acc = acc * epsilon_at_half(w.chi);
  }
  return acc;
}

// gamma^V / gamma^W on characters, for a dimension gap l = l(V, W) != 0:
// the product of abelian gamma factors that transfers the doubling gamma
// between the members of a dual pair tower.
inline CValue gamma_transfer_ratio(long l, const QuadraticCharacter& chi_prod) {
  if (l == 0)
    throw std::invalid_argument(
        "the transfer ratio needs a nonzero dimension gap");
  if (l > 0)
    return gamma_product(l, {1, half_of(l - 1)}, half_int(-1), chi_prod).inv();
  return gamma_product(-l, {1, half_of(-l - 1)}, half_int(-1), chi_prod);
}

// Central sign of the big-theta lift: c_sigma(-1) from c_pi(-1) and the
// discriminant characters of the pair.
inline int central_sign_relation(const DualPair& pair, int c_pi) {
  if (c_pi != 1 && c_pi != -1)
    throw std::invalid_argument("a central sign must be +1 or -1");
  return c_pi * sign_pow(pair.v.chi.at_minus_one(), pair.w.n) *
         sign_pow(pair.w.chi.at_minus_one(), pair.v.n);
}

// Dimension ratio of the eta spaces: 2 exactly when the form sign is -1 and
// the representation is fixed by the outer involution.
inline long dim_eta_ratio(int epsilon, bool eps_fixed) {
  if (epsilon != 1 && epsilon != -1)
    throw std::invalid_argument("the form sign must be +1 or -1");
  return (epsilon == -1 && eps_fixed) ? 2 : 1;
}

// The Steinberg consistency report: its formal degree against the adjoint
// gamma factor at the center, with the trivial representation as anchor.
struct SteinbergReport {
  QValue deg_st;
  QValue deg_one;
  QValue ratio;
  QValue half_gamma;
  bool equal = false;
  QValue adjoint_gamma_at_minus_half;
};

inline SteinbergReport steinberg_check() {
  // A(s) = q^(-4s) zeta(3/2 - s)^2 / zeta(s + 3/2)^2
  SValue A = SValue::q_lin({-4, half_int(0)}) * zeta({-1, half_of(3)}).pow(2) /
             zeta({1, half_of(3)}).pow(2);
  QResult a_half = A.substitute_s(half_of(-1));
  if (a_half.is_pole) throw std::domain_error("the adjoint factor degenerates");

  SteinbergReport rep;
  rep.adjoint_gamma_at_minus_half = a_half.value;
  rep.deg_st = QValue(rat(1, 2)) * a_half.value;

  HermitianSpace v1 = make_space(+1, 1, QuadraticCharacter::trivial());
  rep.deg_one = group_volume_anisotropic(v1).inv();
  rep.ratio = rep.deg_st / rep.deg_one;

  CResult g = gamma_doubling_trivial({1, half_of(1)}, v1).substitute_s(half_of(-1));
  if (g.is_pole) throw std::domain_error("the doubling factor degenerates");
  rep.half_gamma = QValue(rat(1, 2)) * g.value.scalar().as_qvalue();
  rep.equal = rep.ratio == rep.half_gamma;
  return rep;
}

}  // namespace qlc

#endif  // QLC_THETA_HPP
