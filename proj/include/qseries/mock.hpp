#ifndef QSERIES_MOCK_HPP_
#define QSERIES_MOCK_HPP_

#include "qseries/hecke.hpp"

namespace qseries {

enum class MockName { Mu2, F3, Omega3, Psi3, Chi3 };

namespace detail {

// The five classical q-hypergeometric sums in the plain variable q.  Every
// denominator Pochhammer has constant term 1, so the n-th term contributes
// nothing below its leading exponent and the index range is exact.
inline Series mock_plain(MockName name, Exp T) {
  Series acc(0, T);
  switch (name) {
    case MockName::Mu2:
      for (Exp n = 0; n * n <= T; ++n) {
        Series t = pochhammer(qpow(1), n, qpow(2), T) *
                   invert(pochhammer(mono(-1, 2), n, qpow(2), T).pow(2).truncated(T));
        acc = acc + scale(shift(t, n * n), Rational(n % 2 ? -1 : 1));
      }
      break;
    case MockName::F3:
      for (Exp n = 0; n * n <= T; ++n) {
        Series t = invert(pochhammer(mono(-1, 1), n, qpow(1), T).pow(2).truncated(T));
        acc = acc + shift(t, n * n);
      }
      break;
    case MockName::Omega3:
      for (Exp n = 0; 2 * n * (n + 1) <= T; ++n) {
        Series t = invert(pochhammer(qpow(1), n + 1, qpow(2), T).pow(2).truncated(T));
        acc = acc + shift(t, 2 * n * (n + 1));
      }
      break;
    case MockName::Psi3:
      for (Exp n = 1; n * n <= T; ++n) {
        Series t = invert(pochhammer(qpow(1), n, qpow(2), T));
        acc = acc + shift(t, n * n);
      }
      break;
    case MockName::Chi3:
      for (Exp n = 0; n * n <= T; ++n) {
        Series t = pochhammer(mono(-1, 1), n, qpow(1), T) *
                   invert(pochhammer(mono(-1, 3), n, qpow(3), T));
        acc = acc + shift(t.truncated(T), n * n);
      }
      break;
  }
  return acc;
}

}  // namespace detail

// mock(name, base, O): the named series evaluated at the substituted base,
// e.g. f3 at +q^2 is f_3(q^2) and omega3 at -q is omega_3(-q).
inline Series mock(MockName name, const SignedMonomial& base, Exp O) {
  if (base.exp < 1)
    throw NonpositiveBaseExponent("mock: base exponent must be >= 1");
  Exp T = floor_div(O, base.exp) + 1;
  return compose_base(detail::mock_plain(name, T), base);
}

// Universal odd-order building block
// g_3(x;q) = x^{-1} ( -1 + sum_{n>=0} q^{n^2} / ((x)_{n+1} (q/x)_n) ),
// defined when (x)_{n+1} and (q/x)_n are units, i.e. 1 <= x.exp < base.exp.
inline Series universal_g3(const SignedMonomial& x, const SignedMonomial& base, Exp O) {
  if (base.exp < 1)
    throw NonpositiveBaseExponent("g3: base exponent must be >= 1");
  if (x.exp < 1 || x.exp >= base.exp)
    throw NonUnitDenominator("g3: needs 1 <= x.exp < base.exp");
  Exp T = O + x.exp;
  Series acc = Series::constant(-1, T);
  for (Exp n = 0; base.exp * n * n <= T; ++n) {
    Series den = pochhammer(x, n + 1, base, T) *
                 pochhammer(base * x.inverse(), n, base, T);
    Series t = invert(den.truncated(T));
    acc = acc + scale(shift(t, base.exp * n * n), Rational(base.pow(n * n).sign));
  }
  return scale(shift(acc, -x.exp), Rational(x.sign));
}

}  // namespace qseries

#endif  // QSERIES_MOCK_HPP_
