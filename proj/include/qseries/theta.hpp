#ifndef QSERIES_THETA_HPP_
#define QSERIES_THETA_HPP_

#include <optional>

#include "qseries/series.hpp"

namespace qseries {

// j(x; Q) = sum_{n in Z} (-1)^n Q^{binom(n,2)} x^n, truncated at O.  The sum
// ranges over the integer interval where the convex exponent
// E(n) = Q.exp*binom(n,2) + x.exp*n stays <= O; the interval is located from
// the exact vertex of the parabola, no heuristic cutoff.
inline Series theta_j(const SignedMonomial& x, const SignedMonomial& base, Exp O) {
  if (base.exp < 1)
    throw NonpositiveBaseExponent("theta_j: base exponent must be >= 1");
  const Exp b = base.exp;
  auto E = [&](Exp n) { return b * binom2(n) + x.exp * n; };
  Exp nf = floor_div(b - 2 * x.exp, 2 * b);  // floor of the vertex 1/2 - x.exp/b
  Exp nbest = (E(nf) <= E(nf + 1)) ? nf : nf + 1;
  if (E(nbest) > O) return Series::zero(O);
  Series r(std::min(E(nbest), O), O);
  auto accumulate = [&](Exp n) {
    int sign = 1;
    if (n % 2 != 0) sign = -sign;
    if (base.sign < 0 && binom2(n) % 2 != 0) sign = -sign;
    if (x.sign < 0 && n % 2 != 0) sign = -sign;
    r.add_to(E(n), Rational(sign));
  };
  for (Exp n = nbest; E(n) <= O; ++n) accumulate(n);
  for (Exp n = nbest - 1; E(n) <= O; --n) accumulate(n);
  return r;
}

enum class JKind { Plain, Bar, Single };

// J_{a,b} = j(q^a;q^b), Jbar_{a,b} = j(-q^a;q^b), J_a = prod_{i>=1}(1-q^{ai}).
inline Series J_family(Exp a, Exp b, JKind kind, Exp O) {
  switch (kind) {
    case JKind::Plain:
      return theta_j(qpow(a), qpow(b), O);
    case JKind::Bar:
      return theta_j(mono(-1, a), qpow(b), O);
    case JKind::Single:
      if (a < 1) throw NonpositiveBaseExponent("J_a needs a >= 1");
      return pochhammer(qpow(a), std::nullopt, qpow(a), O);
  }
  throw Error("J_family: bad kind");
}

inline Series J(Exp a, Exp b, Exp O) { return J_family(a, b, JKind::Plain, O); }
inline Series Jbar(Exp a, Exp b, Exp O) { return J_family(a, b, JKind::Bar, O); }
inline Series Jsingle(Exp a, Exp O) { return J_family(a, 0, JKind::Single, O); }

// J_a in the variable base^a (used by the Hecke split with rescaled base).
inline Series Jsingle_in(Exp a, const SignedMonomial& base, Exp O) {
  SignedMonomial m = base.pow(a);
  return pochhammer(m, std::nullopt, m, O);
}

// True iff j(x;base) is identically zero, i.e. x lies in the cyclic group
// generated by the base monomial.
inline bool theta_j_is_zero(const SignedMonomial& x, const SignedMonomial& base) {
  if (x.exp % base.exp != 0) return false;
  Exp n = x.exp / base.exp;
  return x.sign == base.pow(n).sign;
}

// 1/j(x;base) with result order >= O.  Monomial content is factored by
// invert itself; an identically vanishing theta is rejected.
inline Series theta_j_inverse(const SignedMonomial& x, const SignedMonomial& base, Exp O) {
  if (theta_j_is_zero(x, base))
    throw NonUnitDenominator("1/j: theta vanishes identically at x = base^n");
  Series jt = theta_j(x, base, O);
  if (jt.is_zero())
    throw NonUnitDenominator("1/j: theta vanishes on the requested window");
  Exp k = jt.lo_effective();
  if (k > 0) jt = theta_j(x, base, O + 2 * k);
  return invert(jt);
}

}  // namespace qseries

#endif  // QSERIES_THETA_HPP_
