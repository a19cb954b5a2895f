#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "qlc/cvalue.hpp"
#include "qlc/qvalue.hpp"
#include "qlc/svalue.hpp"

using namespace qlc;

namespace {

Laurent<Rat> lau(long lo, std::vector<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return Laurent<Rat>(lo, std::move(v));
}

// gamma factor of the trivial character: (1 - q^-sigma) / (1 - q^(sigma-1)).
SValue gamma_trivial(SLin sigma) {
  SValue one(1);
  return (one - SValue::q_lin({-sigma.k, -sigma.c})) /
         (one - SValue::q_lin(sigma - half_int(1)));
}

QValue rand_qvalue(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coeff(-3, 3), lo(-3, 0), len(1, 4);
  auto mk = [&]() {
    std::vector<Rat> v;
    long n = len(rng);
    for (long i = 0; i < n; ++i) v.emplace_back(coeff(rng));
    return Laurent<Rat>(lo(rng), std::move(v));
  };
  Laurent<Rat> num = mk();
  Laurent<Rat> den = mk();
  while (den.is_zero()) den = mk();
  return QValue(num, den);
}

// Random s-dependent value of the shape the local factors take: a product,
// quotient and sum of atoms 1 - u^a X^k and monomials q^(ks+c).
SValue rand_svalue(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> ue(-2, 2), xe(1, 2), sgn(0, 1), pick(0, 3);
  auto atom = [&]() {
    long k = xe(rng) * (sgn(rng) ? 1 : -1);
    SValue m = SValue(QValue::u_pow(ue(rng))) * SValue::x_pow(k);
    return sgn(rng) ? SValue(1) - m : SValue(1) + m;
  };
  SValue acc(rand_qvalue(rng));
  for (int i = 0; i < 3; ++i) {
    switch (pick(rng)) {
      case 0: acc = acc * atom(); break;
      case 1: acc = acc / atom(); break;
      case 2: acc = acc + atom(); break;
      default: acc = acc * SValue::q_lin({ue(rng), half_of(ue(rng))}); break;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("canonical forms of Q(u) fractions") {
  // (1 - q^-2)/(1 - q^-1) = 1 + q^-1, with q = u^2.
  QValue a(lau(-4, {-1, 0, 0, 0, 1}), lau(-2, {-1, 0, 1}));
  QValue b(lau(-2, {1, 0, 1}), lau(0, {1}));  // 1 + u^-2
  CHECK(a == b);
  CHECK(a.str() == "1*q^(0/2) + 1*q^(-2/2)");

  // (u^2 - 1)/(u - 1) = u + 1.
  QValue c(lau(0, {-1, 0, 1}), lau(0, {-1, 1}));
  CHECK(c == QValue(lau(0, {1, 1}), lau(0, {1})));
  CHECK(c.str() == "1*q^(1/2) + 1*q^(0/2)");

  // Monomial split is pinned by a nonzero constant term on each side.
  CHECK(QValue::u_pow(3) / QValue::u_pow(2) == QValue::u_pow(1));
  CHECK((QValue(1) / (QValue(1) - QValue::u_pow(-1))).str() ==
        "(1*q^(1/2)) / (1*q^(1/2) + -1*q^(0/2))");

  // Zero denominator is not a value.
  CHECK_THROWS_WITH(QValue(lau(0, {1}), Laurent<Rat>{}),
                    "not a value: zero denominator");

  // Canonicalization is idempotent.
  CHECK(canonicalize(a) == a);
}

TEST_CASE("substitution specializes after full reduction") {
  // zeta(2s)/zeta(2s+1) at s = 1/2 equals 1 + q^-1.
  SValue one(1);
  SValue f = (one - SValue::q_lin({-2, half_int(-1)})) /
             (one - SValue::q_lin({-2, half_int(0)}));
  QResult r = f.substitute_s(half_of(1));
  REQUIRE(!r.is_pole);
  CHECK(r.value == QValue(lau(-2, {1, 0, 1}), lau(0, {1})));

  // gamma(s)gamma(s+1) for the trivial character: the zero at s=0 of one
  // factor cancels the pole of the other inside the reduced form.
  SValue g = gamma_trivial(svar()) * gamma_trivial(svar() + half_int(1));
  QResult g0 = g.substitute_s(half_int(0));
  REQUIRE(!g0.is_pole);
  CHECK(g0.value == QValue(-1));

  // The factors alone hit 0 and a pole there.
  CHECK(gamma_trivial(svar()).substitute_s(half_int(0)).value == QValue(0));
  CHECK(gamma_trivial(svar() + half_int(1)).substitute_s(half_int(0)).is_pole);
  CHECK(gamma_trivial(svar() + half_int(1)).substitute_s(half_int(0)).str() ==
        "pole at s = 0/2");

  // X = q^-s specializes to 1 at s = 0.
  CHECK(SValue::q_lin({-1, {0}}).substitute_s(half_int(0)).value == QValue(1));
}

TEST_CASE("numeric evaluation stays exact") {
  QValue v = QValue(1) + QValue::u_pow(-2);  // 1 + q^-1
  CHECK(v.eval_at_q(Rat(3)) == rat(4, 3));
  CHECK_THROWS_WITH(QValue::u_pow(1).eval_at_q(Rat(3)), "irrational evaluation");
  CHECK(QValue::u_pow(1).eval_at_q(Rat(9)) == Rat(3));
  CHECK(v.eval_at_q(Rat(9)) == rat(10, 9));
  CHECK_THROWS(v.eval_at_q(Rat(1)));
  CHECK_THROWS(v.eval_at_q(rat(1, 2)));

  // Mixed-parity example: (1+u)(1-u) = 1-q evaluates rationally at q=3
  // although each factor alone does not.
  QValue w = (QValue(1) + QValue::u_pow(1)) * (QValue(1) - QValue::u_pow(1));
  CHECK(w.eval_at_q(Rat(3)) == Rat(-2));
  CHECK_THROWS_WITH((QValue(1) + QValue::u_pow(1)).eval_at_q(Rat(3)),
                    "irrational evaluation");
}

TEST_CASE("root-number symbols form a reduced word") {
  CValue e_minus = CValue::eps("ram-.a1", -1);
  CHECK(e_minus * e_minus == CValue(-1));
  CHECK(e_minus.inv() == CValue(-1) * e_minus);
  CHECK(e_minus * e_minus.inv() == CValue(1));

  CValue e_plus = CValue::eps("ram+.a1", +1);
  CHECK(e_plus * e_plus == CValue(1));
  CHECK(e_plus.inv() == e_plus);

  // Distinct symbols commute and both survive in id order.
  CValue prod = e_minus * e_plus * CValue(QValue::q_pow(half_of(-1)));
  CHECK(prod.str() == "1*q^(-1/2) * eps(ram+.a1) * eps(ram-.a1)");

  // Numeric evaluation: eps with square -1 is refused, eps with square 1
  // needs a supplied sign.
  CHECK_THROWS(prod.evaluate_numeric(Rat(4)));
  CValue ok = e_plus * CValue(2);
  CHECK_THROWS_WITH(ok.evaluate_numeric(Rat(4)),
                    "missing unit value for eps(ram+.a1)");
  std::map<std::string, Rat> units{{"ram+.a1", Rat(-1)}};
  CHECK(ok.evaluate_numeric(Rat(4), units) == Rat(-2));
  std::map<std::string, Rat> bad{{"ram+.a1", Rat(2)}};
  CHECK_THROWS(ok.evaluate_numeric(Rat(4), bad));
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(20260816u);
  for (int i = 0; i < 1000; ++i) {
    QValue a = rand_qvalue(rng), b = rand_qvalue(rng), c = rand_qvalue(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == QValue(0));
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) CHECK(a * a.inv() == QValue(1));
  }
}

TEST_CASE("substitution is multiplicative") {
  std::mt19937_64 rng(97531u);
  int used = 0;
  for (int i = 0; i < 60; ++i) {
    SValue f = rand_svalue(rng), g = rand_svalue(rng);
    for (long tw : {-2L, -1L, 0L, 1L, 2L, 3L}) {
      QResult rf = f.substitute_s({tw}), rg = g.substitute_s({tw});
      QResult rfg = (f * g).substitute_s({tw});
      QResult rsum = (f + g).substitute_s({tw});
      if (rf.is_pole || rg.is_pole) continue;
      ++used;
      REQUIRE(!rfg.is_pole);
      CHECK(rfg.value == rf.value * rg.value);
      REQUIRE(!rsum.is_pole);
      CHECK(rsum.value == rf.value + rg.value);
    }
  }
  CHECK(used > 100);  // the sample actually exercised the law
}

TEST_CASE("canonical strings for s-dependent values") {
  SValue z2s = SValue(1) / (SValue(1) - SValue::q_lin({-2, {0}}));  // zeta(2s)
  CHECK(z2s.str() == "(-1*q^(0/2)) / (1*q^(0/2)*X^(2) + -1*q^(0/2))");
  CHECK(SValue(QValue(1) + QValue::u_pow(-2)).str() == "1*q^(0/2) + 1*q^(-2/2)");
  CHECK(SValue(0).str() == "0");
}
