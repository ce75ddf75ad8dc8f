#ifndef QSERIES_STRINGFN_HPP_
#define QSERIES_STRINGFN_HPP_

#include <map>
#include <numeric>
#include <vector>

#include "qseries/mock.hpp"

namespace qseries {

struct StringParams {
  Exp p, pprime, m, ell;

  StringParams(Exp p_, Exp pprime_, Exp m_, Exp ell_)
      : p(p_), pprime(pprime_), m(m_), ell(ell_) {
    if (p < 1 || pprime < 2 || pprime <= p)
      throw Error("string_c: need pprime > p >= 1 and pprime >= 2");
    if (std::gcd((long long)p, (long long)pprime) != 1)
      throw Error("string_c: p and pprime must be coprime");
    if (ell < 0 || ell > pprime - 2)
      throw Error("string_c: spin out of range 0 <= ell <= pprime-2");
    if (((m - ell) % 2 + 2) % 2 != 0)
      throw Error("string_c: quantum number must satisfy m = ell (mod 2)");
  }
};

// q^{offset} * body with integer-exponent body; fractional bookkeeping for
// the Weyl-Kac oracle and the eta-quotient closed forms stays here and never
// enters Series.
struct OffsetSeries {
  Rational offset;
  Series body;
};

namespace detail {

inline Series euler3_inverse(Exp T) {
  return invert(pochhammer(qpow(1), std::nullopt, qpow(1), T).pow(3).truncated(T));
}

}  // namespace detail

// The normalized string function as a Hecke double-sum difference:
// C = (1/(q)_inf^3) ( f_{1,p',2pp'}(q^{1+(m+ell)/2}, -q^{p(p'+ell+1)}; q)
//                   - f_{1,p',2pp'}(q^{(m-ell)/2},   -q^{p(p'-(ell+1))}; q) ).
// The result is asserted to be an integer power series; a violation signals
// an implementation bug, not a user error.
inline Series string_c(const StringParams& sp, Exp O) {
  if (O < 0) return Series::zero(O);
  Series r = ensure_order(
      [&](Exp T) {
        Series f1 = hecke_f(1, sp.pprime, 2 * sp.p * sp.pprime,
                            qpow(1 + (sp.m + sp.ell) / 2),
                            mono(-1, sp.p * (sp.pprime + sp.ell + 1)), qpow(1), T);
        Series f2 = hecke_f(1, sp.pprime, 2 * sp.p * sp.pprime,
                            qpow((sp.m - sp.ell) / 2),
                            mono(-1, sp.p * (sp.pprime - (sp.ell + 1))), qpow(1), T);
        Exp neg = std::max(Exp(0), -std::min(f1.lo_effective(), f2.lo_effective()));
        return (f1 - f2) * detail::euler3_inverse(T + neg);
      },
      O);
  for (const auto& [e, v] : r.terms()) {
    if (e > O) break;
    if (denominator(v) != 1)
      throw NonIntegralCoefficient("string_c: coefficient at q^" + std::to_string(e) +
                                   " is " + v.str());
    if (e < 0)
      throw NonIntegralCoefficient("string_c: negative exponent " + std::to_string(e) +
                                   " survived normalization");
  }
  return r.truncated(O);
}

inline Series string_c(Exp p, Exp pprime, Exp m, Exp ell, Exp O) {
  return string_c(StringParams(p, pprime, m, ell), O);
}

// Integral-level compact form C = f_{1,1+N,1}(q^{1+(m+l)/2}, q^{1-(m-l)/2};q)/(q)^3.
inline Series string_c_integral(Exp N, Exp m, Exp ell, Exp O) {
  if (N < 1) throw Error("string_c_integral: N must be a positive integer");
  if (ell < 0 || ell > N) throw Error("string_c_integral: need 0 <= ell <= N");
  if (((m - ell) % 2 + 2) % 2 != 0)
    throw Error("string_c_integral: m = ell (mod 2) required");
  if (O < 0) return Series::zero(O);
  return ensure_order(
             [&](Exp T) {
               Series f = hecke_f(1, 1 + N, 1, qpow(1 + (m + ell) / 2),
                                  qpow(1 - (m - ell) / 2), qpow(1), T);
               Exp neg = std::max(Exp(0), -f.lo_effective());
               return f * detail::euler3_inverse(T + neg);
             },
             O)
      .truncated(O);
}

// Truncated generalized Euler sum  sum_L (-1)^L q^{binom(L,2)} C_{2L+eta,ell};
// expected delta_{ell,eta}.  Summands are integer power series (asserted by
// string_c), so the L-range is exactly { L : binom(L,2) <= O }.
inline Series gen_euler_check(Exp p, Exp pprime, Exp ell, Exp eta, Exp O) {
  if (((ell + eta) % 2 + 2) % 2 != 0)
    throw Error("gen_euler_check: ell + eta must be even");
  if (eta < 0 || eta > pprime - 1) throw Error("gen_euler_check: eta out of Z_{p'}");
  Series acc(0, O);
  auto add_term = [&](Exp L) {
    Exp b2 = binom2(L);
    if (b2 > O) return false;
    Series c = string_c(p, pprime, 2 * L + eta, ell, O - b2);
    acc = acc + scale(shift(c, b2), Rational((L % 2 + 2) % 2 ? -1 : 1));
    return true;
  };
  for (Exp L = 0; add_term(L); ++L) {
  }
  for (Exp L = -1; add_term(L); --L) {
  }
  return acc;
}

enum class Spin { Even, Odd };

// LHS - RHS of the quasi-periodic relation at the integer-exponent
// normalization (the relation multiplied through by the common rational
// offset q^{-s_lambda} q^{p j t^2 + ...}); expected zero.
inline Series quasi_period_delta(Spin parity, Exp p, Exp j, Exp t, Exp s, Exp r, Exp O) {
  if (p < 1 || j < 1 || t < 0)
    throw Error("quasi_period_delta: need p,j >= 1 and t >= 0");
  if (std::gcd((long long)p, (long long)(2 * p + j)) != 1)
    throw Error("quasi_period_delta: gcd(p, 2p+j) must be 1");
  const Exp pp = 2 * p + j;
  const bool even = parity == Spin::Even;
  const Exp m_hi = even ? 2 * j * t + 2 * s : 2 * j * t + 2 * s + 1;
  const Exp m_lo = even ? 2 * s : 2 * s + 1;
  const Exp spin = even ? 2 * r : 2 * r + 1;
  const Exp tshift = even ? p * j * t * t + 2 * p * t * s : p * j * t * t + p * t * (2 * s + 1);

  Series lhs = ensure_order(
      [&](Exp T) {
        Series e3 = pochhammer(qpow(1), std::nullopt, qpow(1), T).pow(3).truncated(T);
        return e3 * string_c(p, pp, m_hi, spin, T) -
               shift(e3 * string_c(p, pp, m_lo, spin, std::max(Exp(0), T - tshift)), tshift);
      },
      O);

  const Exp ell1 = even ? 2 * r + 1 : 2 * r + 2;  // (ell + 1)
  Series rhs = Series::zero(Series::kExactOrder);
  for (Exp i = 1; i <= t; ++i) {
    Exp i_exp = even ? -2 * p * j * binom2(i) - 2 * p * s * i
                     : -2 * p * j * binom2(i) - p * (2 * s + 1) * i;
    for (Exp m = 1; m <= p - 1; ++m) {
      Exp me = binom2(m + 1) + m * (r - p);
      Series bracket1 = Series::monomial(Rational(1), m * (j * i + s - j + (even ? 0 : 1))) -
                        Series::monomial(Rational(1), -m * (j * i + s));
      Series theta_diff = ensure_order(
          [&](Exp T) {
            return theta_j(mono(-1, m * pp + p * ell1), qpow(2 * p * pp), T) -
                   shift(theta_j(mono(-1, -m * pp + p * ell1), qpow(2 * p * pp), T),
                         m * pp - m * ell1);
          },
          O + std::max(Exp(0), -i_exp - me + 4 * p * j));
      Series term = scale(shift(bracket1 * theta_diff, i_exp + me),
                          Rational((m % 2) ? -1 : 1));
      rhs = rhs + term;
    }
  }
  Exp pre = tshift + binom2(p) - p * (r - s);
  rhs = scale(shift(rhs, pre), Rational((p % 2) ? -1 : 1));
  Exp cap = std::min(lhs.order(), rhs.order());
  return (lhs - rhs).truncated(std::min(cap, O));
}

// Independent Weyl-Kac evaluation.  Works in w = z^{1/2}; numerator and
// denominator become Laurent polynomials in w whose coefficients are exact
// integer-exponent q-series after the common fractional offsets
// q^{p(ell+1)^2/(4p')} and q^{1/8} are factored out.  The quotient is built
// one q-order at a time by exact division by the leading w-slice w^{-1} - w;
// the coefficient of w^{-m} is then the normalized string function, and the
// fractional offsets are asserted to reproduce q^{-s_lambda} exactly.
inline std::map<Exp, OffsetSeries> weyl_kac_oracle(Exp p, Exp pprime, Exp ell,
                                                   const std::vector<Exp>& window, Exp O) {
  StringParams validate(p, pprime, ell, ell);
  (void)validate;
  if (pprime <= 2 * p)
    throw Error("weyl_kac_oracle: admissible level must be positive (pprime > 2p)");
  if (O < 0) O = 0;
  using Slice = std::map<Exp, Rational>;  // w-exponent -> coefficient

  // Theta numerator: for sigma = +-1 and k in Z, sigma * q^{pp'k^2 + p n k}
  // at w^{-2p'k - n} with n = sigma(ell+1); the exponent is convex in k with
  // vertex inside [-1,1], so scan outward from 0.
  std::vector<Slice> num(static_cast<std::size_t>(O + 1));
  std::vector<Slice> den(static_cast<std::size_t>(O + 1));
  for (int sigma : {+1, -1}) {
    Exp n = sigma * (ell + 1);
    auto qexp = [&](Exp k) { return p * pprime * k * k + p * n * k; };
    for (Exp step : {Exp(+1), Exp(-1)}) {
      Exp prev = qexp(step > 0 ? 0 : -1);
      for (Exp k = (step > 0 ? 0 : -1);; k += step) {
        Exp e = qexp(k);
        if (e > O && e >= prev && std::abs(k) >= 2) break;
        if (e >= 0 && e <= O) num[e][-2 * pprime * k - n] += sigma;
        prev = e;
      }
    }
    for (Exp k = -(O + 2); k <= O + 2; ++k) {
      Exp e = 2 * k * k + sigma * k;
      if (e >= 0 && e <= O) den[e][-4 * k - sigma] += sigma;
    }
  }

  // Quotient slices: Q * den = num solved order by order; den's q-order-0
  // slice is exactly w^{-1} - w, and (w^{-1} - w)(a w^T) = a w^{T-1} - a w^{T+1},
  // so peeling the top exponent M of the residue gives a = -R_M at T = M-1.
  std::vector<Slice> quot(static_cast<std::size_t>(O + 1));
  for (Exp d = 0; d <= O; ++d) {
    Slice rem = num[d];
    for (Exp d1 = 0; d1 < d; ++d1) {
      if (quot[d1].empty() || den[d - d1].empty()) continue;
      for (const auto& [wq, cq] : quot[d1]) {
        for (const auto& [wd, cd] : den[d - d1]) {
          Rational& slot = rem[wq + wd];
          slot -= cq * cd;
          if (slot == 0) rem.erase(wq + wd);
        }
      }
    }
    Slice q;
    Exp floor_w = rem.empty() ? 0 : rem.begin()->first - 4 * (Exp)rem.size() - 8;
    while (!rem.empty()) {
      auto top = std::prev(rem.end());
      Exp wtop = top->first;
      if (wtop < floor_w)
        throw WindowTooSmall("weyl_kac_oracle: division left a remainder");
      Rational a = -top->second;
      rem.erase(top);
      Rational& qslot = q[wtop - 1];
      qslot += a;
      if (qslot == 0) q.erase(wtop - 1);
      Rational& low = rem[wtop - 2];
      low -= a;
      if (low == 0) rem.erase(wtop - 2);
    }
    quot[d] = std::move(q);
  }

  // Assemble requested coefficients and check fractional offsets.
  Rational offN = Rational(p * (ell + 1) * (ell + 1), 4 * pprime);
  Rational offD(1, 8);
  Rational level = Rational(pprime, p) - 2;
  std::map<Exp, OffsetSeries> out;
  for (Exp m : window) {
    if (((m - ell) % 2 + 2) % 2 != 0)
      throw Error("weyl_kac_oracle: window m must satisfy m = ell (mod 2)");
    Rational s_lambda = Rational(-1, 8) + Rational((ell + 1) * (ell + 1)) / (4 * (level + 2)) -
                        Rational(m * m) / (4 * level);
    // chi = q^{offN-offD} (Ntilde/Dtilde) and chi's w^{-m} coefficient is
    // C_{m,ell} q^{m^2/(4N)}, so the integer-exponent body equals
    // q^{-s_lambda} C_{m,ell} exactly when offN - offD - m^2/(4N) = s_lambda.
    if (offN - offD - Rational(m * m) / (4 * level) != s_lambda)
      throw OffsetMismatch("weyl_kac_oracle: fractional offsets failed to cancel");
    Series body(0, O);
    for (Exp d = 0; d <= O; ++d) {
      auto it = quot[d].find(-m);
      if (it != quot[d].end()) body.set(d, it->second);
    }
    out.emplace(m, OffsetSeries{s_lambda, body});
  }
  return out;
}

}  // namespace qseries

#endif  // QSERIES_STRINGFN_HPP_
