#ifndef QSERIES_HECKE_HPP_
#define QSERIES_HECKE_HPP_

#include <functional>

#include "qseries/theta.hpp"

namespace qseries {

// Re-runs an order-parameterized evaluation until the result window reaches
// the requested order; composite quotients with negative monomial content
// need one widening pass at most in practice.
template <class F>
Series ensure_order(F&& eval, Exp O) {
  Exp target = O;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Series s = eval(target);
    if (s.order() >= O) return s;
    target += std::max<Exp>(Exp(16), O - s.order());
  }
  throw WindowTooSmall("ensure_order: window did not reach " + std::to_string(O));
}

struct HeckeSpec {
  Exp a, b, c;
  SignedMonomial x, y;
  SignedMonomial base;

  HeckeSpec(Exp a_, Exp b_, Exp c_, SignedMonomial x_, SignedMonomial y_,
            SignedMonomial base_)
      : a(a_), b(b_), c(c_), x(x_), y(y_), base(base_) {
    if (a < 1 || b < 1 || c < 1)
      throw UnboundedDoubleSum("hecke_f: quadratic-form parameters must be >= 1");
    if (base.exp < 1)
      throw NonpositiveBaseExponent("hecke_f: base exponent must be >= 1");
  }
};

// f_{a,b,c}(x,y;q) = (sum_{r,s>=0} - sum_{r,s<0}) (-1)^{r+s} x^r y^s
// q^{a binom(r,2) + brs + c binom(s,2)}.  Each quadrant is enumerated with a
// certified bound: rows are scanned past the exact vertex of the convex
// column quadratic, and the row loop stops only once the clamped row minimum
// is provably increasing and beyond O.
inline Series hecke_f(const HeckeSpec& spec, Exp O) {
  const Exp Be = spec.base.exp;
  auto Q = [&](Exp r, Exp s) {
    return spec.a * binom2(r) + spec.b * r * s + spec.c * binom2(s);
  };
  auto E = [&](Exp r, Exp s) { return Be * Q(r, s) + spec.x.exp * r + spec.y.exp * s; };
  auto sign_at = [&](Exp r, Exp s) {
    int sign = ((r + s) % 2 != 0) ? -1 : 1;
    if (spec.x.sign < 0 && r % 2 != 0) sign = -sign;
    if (spec.y.sign < 0 && s % 2 != 0) sign = -sign;
    if (spec.base.sign < 0 && Q(r, s) % 2 != 0) sign = -sign;
    return sign;
  };

  Series result(std::min(Exp(0), O), O);

  // quadrant = +1: r,s >= 0 added; quadrant = -1: r,s <= -1 subtracted.
  for (int quadrant : {+1, -1}) {
    auto row = [&](Exp u) { return quadrant > 0 ? u : -1 - u; };
    auto col = [&](Exp v) { return quadrant > 0 ? v : -1 - v; };
    Exp prev_head = 0;
    for (Exp u = 0;; ++u) {
      if (u > 2000000)
        throw UnboundedDoubleSum("hecke_f: termination certificate failed");
      Exp r = row(u);
      Exp head = E(r, col(0));
      // Column scan: E is convex in the column index, so once past the
      // vertex and beyond O nothing later contributes.
      Exp prev = head;
      for (Exp v = 0;; ++v) {
        Exp e = E(r, col(v));
        if (e > O && (v > 0 ? e >= prev : E(r, col(1)) >= e)) break;
        if (e <= O) result.add_to(e, Rational(quadrant * sign_at(r, col(v))));
        prev = e;
      }
      // Row-loop certificate.  vertex_at_zero (the column vertex sits at
      // v <= 0) is monotone in u, and under it the row minimum equals head;
      // head itself is convex in u, so head > O past its vertex is final.
      bool vertex_at_zero = E(r, col(1)) >= head;
      bool head_past_vertex = (u > 0 && head >= prev_head);
      if (vertex_at_zero && head > O && head_past_vertex) break;
      prev_head = head;
    }
  }
  return result;
}

inline Series hecke_f(Exp a, Exp b, Exp c, SignedMonomial x, SignedMonomial y,
                      SignedMonomial base, Exp O) {
  return hecke_f(HeckeSpec(a, b, c, x, y, base), O);
}

struct AppellSpec {
  SignedMonomial x, z;
  SignedMonomial base;

  AppellSpec(SignedMonomial x_, SignedMonomial z_, SignedMonomial base_)
      : x(x_), z(z_), base(base_) {
    if (base.exp < 1)
      throw NonpositiveBaseExponent("appell_m: base exponent must be >= 1");
  }
};

// m(x,z;q) = (1/j(z;q)) sum_r (-1)^r q^{binom(r,2)} z^r / (1 - q^{r-1} x z).
// Denominators expand as geometric series: forward for positive exponent of
// u_r = q^{r-1} x z, backward (as -u^{-1}/(1-u^{-1})) for negative, and the
// exact constant 1/2 when u_r = -1.  u_r = +1 is a pole.
inline Series appell_m(const AppellSpec& spec, Exp O) {
  if (theta_j_is_zero(spec.z, spec.base))
    throw ThetaDenominatorZero("appell_m: j(z;q) vanishes identically");
  const Exp Be = spec.base.exp;
  const SignedMonomial uxz = spec.x * spec.z;

  auto u_of = [&](Exp r) { return spec.base.pow(r - 1) * uxz; };
  // Minimal exponent contributed by the r-th term.
  auto term_min = [&](Exp r) {
    Exp m = Be * binom2(r) + spec.z.exp * r;
    Exp ue = u_of(r).exp;
    if (ue < 0) m += -ue;
    return m;
  };

  Series jz = theta_j(spec.z, spec.base, O);
  if (jz.is_zero())
    throw ThetaDenominatorZero("appell_m: j(z;q) vanishes on the window");
  Exp k = jz.lo_effective();
  Exp Os = O + std::max(Exp(0), k);

  // r-range: term_min is convex in r (quadratic plus |linear|), so scan
  // outward from 0 until past the vertex and beyond the target order.
  auto scan = [&](Exp start, Exp step, std::vector<Exp>& out) {
    Exp prev = term_min(start);
    for (Exp r = start;; r += step) {
      Exp m = term_min(r);
      if (m > Os && r != start && m >= prev) break;
      if (m > Os && r == start && term_min(r + step) >= m) break;
      if (m <= Os) out.push_back(r);
      prev = m;
    }
  };
  std::vector<Exp> rs;
  scan(0, +1, rs);
  scan(-1, -1, rs);

  Exp mS = Os + 1;
  for (Exp r : rs) mS = std::min(mS, term_min(r));

  Series S(std::min(mS, Os), Os);
  for (Exp r : rs) {
    SignedMonomial u = u_of(r);
    if (u.exp == 0 && u.sign > 0)
      throw AppellPole("appell_m: 1 - q^{r-1}xz vanishes at r = " + std::to_string(r));
    int base_sign =
        ((r % 2 != 0) ? -1 : 1) * spec.base.pow(binom2(r)).sign * spec.z.pow(r).sign;
    Exp e0 = Be * binom2(r) + spec.z.exp * r;
    if (u.exp == 0) {
      S.add_to(e0, Rational(base_sign, 2));
    } else if (u.exp > 0) {
      for (Exp t = 0; e0 + t * u.exp <= Os; ++t)
        S.add_to(e0 + t * u.exp, Rational(base_sign * u.pow(t).sign));
    } else {
      for (Exp t = 1; e0 - t * u.exp <= Os; ++t)
        S.add_to(e0 - t * u.exp, Rational(-base_sign * u.pow(t).sign));
    }
  }

  Exp Oj = O + 2 * std::max(Exp(0), k) + std::max(Exp(0), -mS);
  if (Oj > O) jz = theta_j(spec.z, spec.base, Oj);
  return S * invert(jz);
}

inline Series appell_m(SignedMonomial x, SignedMonomial z, SignedMonomial base, Exp O) {
  return appell_m(AppellSpec(x, z, base), O);
}

struct HeckeSplit {
  Series h;
  Series theta_part;
};

// Expansion of f_{n,n,1} into Appell plus theta parts for n in {4,5,7}:
// f_{n,n,1}(x,y;q) = h - theta / (Jbar_{0,n-1} Jbar_{0,n(n-1)}), with all
// powers of q taken in the supplied base monomial.
inline HeckeSplit hecke_split(int n, SignedMonomial x, SignedMonomial y,
                              SignedMonomial base, Exp O) {
  if (n != 4 && n != 5 && n != 7)
    throw SplitUndefined("hecke_split: n must be one of 4, 5, 7");
  auto B = [&](Exp e) { return base.pow(e); };
  auto jm = [&](SignedMonomial arg, Exp be, Exp order) {
    return theta_j(arg, B(be), order);
  };
  auto jinv = [&](SignedMonomial arg, Exp be, Exp order) {
    try {
      return theta_j_inverse(arg, B(be), order);
    } catch (const NonUnitDenominator& e) {
      throw SplitUndefined(std::string("hecke_split: ") + e.what());
    }
  };
  SignedMonomial minus_one{-1, 0};

  Series h = ensure_order(
      [&](Exp T) -> Series {
        switch (n) {
          case 4:
            return jm(x, 4, T) * appell_m(minus_one * B(3) * y * x.inverse(), minus_one, B(3), T) +
                   jm(y, 1, T) * appell_m(B(6) * x * y.pow(-4), minus_one, B(12), T);
          case 5:
            return jm(x, 5, T) * appell_m(minus_one * B(4) * x.inverse() * y, minus_one, B(4), T) +
                   jm(y, 1, T) * appell_m(minus_one * B(10) * x * y.pow(-5), minus_one, B(20), T);
          default:
            return jm(x, 7, T) * appell_m(minus_one * B(6) * y * x.inverse(), minus_one, B(6), T) +
                   jm(y, 1, T) * appell_m(minus_one * B(21) * x * y.pow(-7), minus_one, B(42), T);
        }
      },
      O);

  Series theta = ensure_order(
      [&](Exp T) -> Series {
        Series total = Series::zero(Series::kExactOrder);
        if (n == 4) {
          for (Exp d = 0; d <= 3; ++d) {
            Series term = Series::monomial(B(3 * binom2(d + 1)), T) *
                          jm(B(3 * (d + 1)) * y, 4, T) *
                          jm(minus_one * B(12 - 3 * (d + 1)) * x * y.inverse(), 12, T) *
                          Jsingle_in(12, base, T).pow(3) *
                          jm(minus_one * B(6 + 3 * (d + 1)) * y.pow(-3), 12, T) *
                          jinv(minus_one * B(6) * x * y.pow(-4), 12, T) *
                          jinv(B(3 * (d + 1)) * x.inverse() * y, 12, T);
            total = total + term;
          }
        } else if (n == 5) {
          for (Exp d = 0; d <= 4; ++d) {
            Series term = Series::monomial(B(2 * d * (d + 1)), T) *
                          Jsingle_in(20, base, T).pow(3) *
                          jm(B(4 + 4 * d) * y, 5, T) *
                          jm(minus_one * B(16 - 4 * d) * x * y.inverse(), 20, T) *
                          jm(B(14 + 4 * d) * y.pow(-4), 20, T) *
                          jinv(B(10) * x * y.pow(-5), 20, T) *
                          jinv(B(4 + 4 * d) * x.inverse() * y, 20, T);
            total = total + term;
          }
        } else {
          for (Exp d = 0; d <= 6; ++d) {
            Series term = Series::monomial(B(6 * binom2(d + 1)), T) *
                          jm(B(6 * (d + 1)) * y, 7, T) *
                          jm(minus_one * B(42 - 6 * (d + 1)) * x * y.inverse(), 42, T) *
                          Jsingle_in(42, base, T).pow(3) *
                          jm(B(21 + 6 * (d + 1)) * y.pow(-6), 42, T) *
                          jinv(B(21) * x * y.pow(-7), 42, T) *
                          jinv(B(6 * (d + 1)) * x.inverse() * y, 42, T);
            total = total + term;
          }
        }
        return total;
      },
      O);

  return {h, theta};
}

}  // namespace qseries

#endif  // QSERIES_HECKE_HPP_
