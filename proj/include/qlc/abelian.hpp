#ifndef QLC_ABELIAN_HPP
#define QLC_ABELIAN_HPP

#include "qlc/cvalue.hpp"
#include "qlc/localdata.hpp"

namespace qlc {

// zeta_F(sigma) = (1 - q^-sigma)^-1 at a linear argument sigma = k*s + c.
inline SValue zeta(SLin sigma) {
  return SValue(1) / (SValue(1) - SValue::q_lin({-sigma.k, -sigma.c}));
}

// zeta_F at a constant argument; sigma = 0 is the pole.
inline QValue zeta_const(Half sigma) {
  if (sigma.tw == 0) throw std::domain_error("zeta_F has its pole at 0");
  return QValue(1) / (QValue(1) - QValue::q_pow(-sigma));
}

// epsilon(1/2, chi, psi) for the fixed additive character of conductor 0:
// 1 for unramified chi; the opaque root-number symbol for ramified chi, the
// unramified twist contributing nu(pi)^a = (-1)^a.
inline CValue epsilon_at_half(const QuadraticCharacter& chi) {
  if (chi.is_unramified()) return CValue(1);
  CValue e = CValue::eps(chi.symbol_id(), chi.sign_at_minus_one);
  if (chi.unram_twist && chi.a % 2 != 0) e = e * CValue(-1);
  return e;
}

// Tate gamma factor gamma(sigma, chi, psi), sigma = k*s + c, for the fixed
// psi of conductor 0:
//   trivial chi:        (1 - q^-sigma) / (1 - q^(sigma-1))
//   unramified chi:     (1 + q^-sigma) / (1 + q^(sigma-1))
//   ramified chi:       eps_chi * q^(a(1/2 - sigma)), times (-1)^a for the
//                       extra unramified twist.
// psi_bar = true multiplies by chi(-1) (conjugate additive character).
inline CValue gamma_factor(SLin sigma, const QuadraticCharacter& chi,
                           bool psi_bar = false) {
  CValue g;
  SLin neg{-sigma.k, -sigma.c};
  switch (chi.kind) {
    case CharKind::Trivial:
      g = CValue((SValue(1) - SValue::q_lin(neg)) /
                 (SValue(1) - SValue::q_lin(sigma - half_int(1))));
      break;
    case CharKind::UnramifiedNontrivial:
      g = CValue((SValue(1) + SValue::q_lin(neg)) /
                 (SValue(1) + SValue::q_lin(sigma - half_int(1))));
      break;
    case CharKind::Ramified: {
      SValue scale = SValue::q_lin(
          {-chi.a * sigma.k, half_of(chi.a * (1 - sigma.c.tw))});
      g = CValue::eps(chi.symbol_id(), chi.sign_at_minus_one) * CValue(scale);
      if (chi.unram_twist && chi.a % 2 != 0) g = g * CValue(-1);
      break;
    }
  }
  if (psi_bar && chi.sign_at_minus_one < 0) g = g * CValue(-1);
  return g;
}

// Product of count gamma factors at arguments base, base+step, ...;
// count = 0 gives 1.
inline CValue gamma_product(long count, SLin base, Half step,
                            const QuadraticCharacter& chi) {
  CValue acc(1);
  SLin arg = base;
  for (long i = 0; i < count; ++i) {
    acc = acc * gamma_factor(arg, chi);
    arg = arg + step;
  }
  return acc;
}

}  // namespace qlc

#endif  // QLC_ABELIAN_HPP
