#ifndef QLC_HALF_HPP
#define QLC_HALF_HPP

namespace qlc {

/// Element of (1/2)Z, stored as twice its value. Exponents of q and the
/// points at which the complex parameter s is specialized all live here.
struct Half {
  long tw = 0;  // the represented value is tw/2

  friend Half operator+(Half a, Half b) { return {a.tw + b.tw}; }
  friend Half operator-(Half a, Half b) { return {a.tw - b.tw}; }
  friend Half operator-(Half a) { return {-a.tw}; }
  friend Half operator*(long n, Half a) { return {n * a.tw}; }
  friend bool operator==(Half a, Half b) { return a.tw == b.tw; }
  friend bool operator!=(Half a, Half b) { return a.tw != b.tw; }

  bool is_integer() const { return tw % 2 == 0; }
};

/// The half-integer n.
inline Half half_int(long n) { return {2 * n}; }

/// The half-integer t/2.
inline Half half_of(long t) { return {t}; }

/// Linear form k*s + c in the complex parameter s, with half-integer
/// constant term. Arguments of local factors are always of this shape.
struct SLin {
  long k = 0;
  Half c{0};

  friend SLin operator+(SLin f, Half h) { return {f.k, f.c + h}; }
  friend SLin operator-(SLin f, Half h) { return {f.k, f.c - h}; }
  friend bool operator==(SLin a, SLin b) { return a.k == b.k && a.c == b.c; }

  /// Value of the form at s = s0.
  Half at(Half s0) const { return Half{k * s0.tw} + c; }
};

/// The bare variable s.
inline SLin svar() { return {1, {0}}; }

/// The constant form c.
inline SLin sconst(Half c) { return {0, c}; }

}  // namespace qlc

#endif  // QLC_HALF_HPP
