#ifndef QLC_RAT_HPP
#define QLC_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qlc {

/// Exact rational scalar. All arithmetic in the library is exact; there is
/// no floating-point fallback anywhere.
using Rat = mpq_class;

/// num/den as an exact rational; rejects a zero denominator.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("not a value: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// base^e for integer e; negative e requires base != 0.
inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("division by zero");
    return Rat(0);
  }
  Rat b = (e < 0) ? Rat(Rat(1) / base) : base;
  unsigned long k = (e < 0) ? 0ul - static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), k);
  out.canonicalize();
  return out;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

/// Exact square root when q0 is the square of a rational; returns false
/// otherwise.
inline bool rat_sqrt(const Rat& q0, Rat& root) {
  if (q0 < 0) return false;
  if (mpz_perfect_square_p(q0.get_num_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(q0.get_den_mpz_t()) == 0) return false;
  Rat r;
  mpz_sqrt(r.get_num_mpz_t(), q0.get_num_mpz_t());
  mpz_sqrt(r.get_den_mpz_t(), q0.get_den_mpz_t());
  r.canonicalize();
  root = r;
  return true;
}

}  // namespace qlc

#endif  // QLC_RAT_HPP
