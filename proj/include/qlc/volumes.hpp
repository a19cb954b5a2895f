#ifndef QLC_VOLUMES_HPP
#define QLC_VOLUMES_HPP

#include <vector>

#include "qlc/localdata.hpp"
#include "qlc/qvalue.hpp"

namespace qlc {

// q^k as an exact value.
inline QValue q_int_pow(long k) { return QValue::u_pow(2 * k); }

// |2|_F^x = q^(-e*x) for a half-integer exponent x.
inline QValue abs2_pow(long e, Half x) { return QValue::u_pow(-e * x.tw); }

// prod_{i=1}^{count} (1 + q^(-(2i-1))).
inline QValue prod_one_plus_odd(long count) {
  QValue acc(1);
  for (long i = 1; i <= count; ++i) acc = acc * (QValue(1) + q_int_pow(-(2 * i - 1)));
  return acc;
}

// prod_{i=1}^{count} (1 - q^(-2i)).
inline QValue prod_one_minus_even(long count) {
  QValue acc(1);
  for (long i = 1; i <= count; ++i) acc = acc * (QValue(1) - q_int_pow(-2 * i));
  return acc;
}

enum class VolumeMethod { Closed, Motive };

// The motive-side data of the Iwahori volume: |B| = q^(-N - a/2) * det-factor
// with N the motive weight sum, a the Artin conductor of the torus motive.
struct MotiveInvariants {
  long motive_exponent = 0;   // N
  long artin_conductor = 0;   // a
  QValue det_factor = QValue(1);
};

inline MotiveInvariants motive_invariants(const HermitianSpace& w) {
  MotiveInvariants m;
  long n = w.n;
  if (w.form_sign == +1) {
    m.motive_exponent = n * n;
    m.artin_conductor = 0;
    QValue det(1);
    for (long k = 1; k <= n; ++k)
      det = det * (QValue(1) - QValue(k % 2 ? -1 : 1) * q_int_pow(-1));
    m.det_factor = det;
    return m;
  }
  bool ram = w.chi.is_ramified();
  m.motive_exponent = ram ? n * n - 2 * n + 1 : n * n - n;
  m.artin_conductor = ram ? w.chi.a * (2 * n - 1) : 0;
  QValue det(1);
  for (long i = 0; i < (n - w.n0) / 2; ++i) det = det * (QValue(1) - q_int_pow(-2));
  switch (w.n0) {
    case 0:
      break;
    case 1:
      if (!ram) det = det * (QValue(1) + q_int_pow(-1));
      break;
    case 2:
      det = det * (QValue(1) + (ram ? q_int_pow(-1) : q_int_pow(-2)));
      break;
    case 3:
      det = det * (QValue(1) + q_int_pow(-1) + q_int_pow(-2) + q_int_pow(-3));
      break;
  }
  m.det_factor = det;
  return m;
}

// Volume of the Iwahori subgroup, by the closed table or through the motive.
inline QValue iwahori_volume(const HermitianSpace& w, VolumeMethod method) {
  long n = w.n;
  if (method == VolumeMethod::Motive) {
    MotiveInvariants m = motive_invariants(w);
    return QValue::u_pow(-2 * m.motive_exponent - m.artin_conductor) * m.det_factor;
  }
  if (w.form_sign == +1) {
    QValue acc = QValue::u_pow(-2 * n * n);
    for (long i = 0; i < n / 2; ++i) acc = acc * (QValue(1) - q_int_pow(-1));
    for (long i = 0; i < (n + 1) / 2; ++i) acc = acc * (QValue(1) + q_int_pow(-1));
    return acc;
  }
  QValue acc(1);
  for (long i = 0; i < (n - w.n0) / 2; ++i) acc = acc * (QValue(1) - q_int_pow(-2));
  bool ram = w.chi.is_ramified();
  switch (w.n0) {
    case 0:
      break;
    case 1:
      if (!ram) acc = acc * (QValue(1) + q_int_pow(-1));
      break;
    case 2:
      acc = acc * (QValue(1) + (ram ? q_int_pow(-1) : q_int_pow(-2)));
      break;
    case 3:
      acc = acc * (QValue(1) + q_int_pow(-1) + q_int_pow(-2) + q_int_pow(-3));
      break;
  }
  // q^(-N - a/2): N = (n-1)^2 and a = a(chi)(2n-1) when chi is ramified,
  // N = n^2 - n and a = 0 otherwise.
  long utw = ram ? -2 * (n - 1) * (n - 1) - w.chi.a * (2 * n - 1)
                 : -2 * (n * n - n);
  return acc * QValue::u_pow(utw);
}

// Index of the image of G(W) in its adjoint-measure normalization: 1 for the
// zero space and for n = 1 with unramified chi, else 2.
inline int kottwitz_index(const HermitianSpace& w) {
  if (w.n == 0) return 1;
  if (w.n == 1 && w.chi.is_unramified()) return 1;
  return 2;
}

// Kottwitz sign e(G(W)).
inline int kottwitz_sign(const HermitianSpace& w) {
  long n = w.n;
  long exp2 = (w.form_sign == +1) ? n * (n + 1) / 2 : n * (n - 1) / 2;
  return exp2 % 2 ? -1 : +1;
}

// |G(W)| for anisotropic W: component index times the Iwahori volume.
inline QValue group_volume_anisotropic(const HermitianSpace& w) {
  if (w.r() != 0)
    throw std::domain_error("group volume needs an anisotropic space");
  if (w.n == 0) return QValue(1);
  return QValue(kottwitz_index(w)) * iwahori_volume(w, VolumeMethod::Closed);
}

// Volume of the standard lattice in the r' x r'' matrix space M(r', r'').
inline QValue lattice_volume_M(long r1, long r2) { return q_int_pow(-r1 * r2); }

// Volume of the unipotent-radical lattice on r hyperbolic planes.
inline QValue lattice_volume_u(long r, int form_sign, long e) {
  long half_q_units = -e * r * (r + 1);  // |2|^(r(r+1)/2) in u-exponents
  long base = (form_sign == +1) ? -r * (r + 1) : -r * (r - 1);
  return QValue::u_pow(half_q_units) * q_int_pow(base);
}

// |C_1| of the appendix: the leading (constant) coefficient of the
// unramified doubling zeta integral. Stated for odd residue characteristic.
inline QValue C1_volume(const HermitianSpace& w) {
  if (w.field.e != 0)
    throw std::domain_error(
        "the appendix closed forms assume odd residue characteristic");
  long n = w.n, fl = n / 2, ce = (n + 1) / 2;
  if (w.form_sign == +1) {
    if (w.gram_val != 0)
      throw std::domain_error(
          "the appendix +1-side formulas are stated at the standard kernel");
    return QValue::u_pow(-2 * (2 * fl * ce + ce)) * prod_one_plus_odd(fl) *
           prod_one_minus_even(fl);
  }
  // |N(R)|^(-rho) = q^(v*(n-1/2)) times the class products.
  QValue acc = QValue::u_pow(w.gram_val * (2 * n - 1)) *
               QValue::u_pow(-2 * (2 * fl * ce - fl));
  bool ram = w.chi.is_ramified();
  long plus = fl, minus = fl;
  switch (w.n0) {
    case 0:
      break;
    case 1:
      if (!ram) plus = ce;
      break;
    case 2:
      minus = fl - 1;
      if (!ram) plus = fl - 1;
      break;
    case 3:
      minus = fl - 1;
      break;
  }
  return acc * prod_one_plus_odd(plus) * prod_one_minus_even(minus);
}

}  // namespace qlc

#endif  // QLC_VOLUMES_HPP
