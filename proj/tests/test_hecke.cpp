#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "qseries/hecke.hpp"

using namespace qseries;

namespace {

bool same(const Series& a, const Series& b, Exp cap = Series::kExactOrder) {
  Exp O = std::min({a.order(), b.order(), cap});
  return equal_up_to(a, b, O).equal;
}

// Independent oracle: plain column-major box scan, no bound certificate.
Series hecke_brute(Exp a, Exp b, Exp c, SignedMonomial x, SignedMonomial y,
                   SignedMonomial base, Exp O, Exp box) {
  Series out(std::min(Exp(0), O), O);
  for (Exp s = -box; s <= box; ++s) {
    for (Exp r = -box; r <= box; ++r) {
      int quadrant;
      if (r >= 0 && s >= 0)
        quadrant = 1;
      else if (r < 0 && s < 0)
        quadrant = -1;
      else
        continue;
      Exp Q = a * binom2(r) + b * r * s + c * binom2(s);
      Exp e = base.exp * Q + x.exp * r + y.exp * s;
      if (e > O) continue;
      int sign = ((r + s) % 2 != 0) ? -1 : 1;
      if (x.sign < 0 && r % 2 != 0) sign = -sign;
      if (y.sign < 0 && s % 2 != 0) sign = -sign;
      if (base.sign < 0 && Q % 2 != 0) sign = -sign;
      out.add_to(e, Rational(quadrant * sign));
    }
  }
  return out;
}

// Sum with the paper's convention for inverted ranges:
// sum_{r=a}^{b} := -sum_{r=b+1}^{a-1} when b < a-1, empty when b = a-1.
Series convention_sum(Exp lo, Exp hi, const std::function<Series(Exp)>& f) {
  Series acc = Series::zero(Series::kExactOrder);
  if (hi >= lo) {
    for (Exp m = lo; m <= hi; ++m) acc = acc + f(m);
  } else if (hi == lo - 1) {
    // empty
  } else {
    for (Exp m = hi + 1; m <= lo - 1; ++m) acc = acc - f(m);
  }
  return acc;
}

struct SpecGen {
  std::mt19937 rng{424242};
  std::uniform_int_distribution<int> sgn{0, 1};
  std::uniform_int_distribution<Exp> abc{1, 3};
  std::uniform_int_distribution<Exp> xe{-4, 6};
  std::uniform_int_distribution<Exp> be{1, 2};
  SignedMonomial monoarg() { return {sgn(rng) ? 1 : -1, xe(rng)}; }
  HeckeSpec spec() {
    return HeckeSpec(abc(rng), abc(rng), abc(rng), monoarg(), monoarg(), {1, be(rng)});
  }
};

Series mono_series(const SignedMonomial& m) { return Series::monomial(m); }

}  // namespace

TEST_CASE("f_{1,1,1}(q,q;q) low-order coefficients against a naive loop") {
  Series f = hecke_f(1, 1, 1, qpow(1), qpow(1), qpow(1), 20);
  Series brute = hecke_brute(1, 1, 1, qpow(1), qpow(1), qpow(1), 20, 80);
  CHECK(same(f, brute));
  CHECK(coefficient_at(f, 0) == 1);
  CHECK(coefficient_at(f, 1) == -3);
}

TEST_CASE("hecke_f agrees with the box oracle on random specs") {
  SpecGen g;
  for (int iter = 0; iter < 80; ++iter) {
    HeckeSpec s = g.spec();
    Series fast = hecke_f(s, 30);
    Series slow = hecke_brute(s.a, s.b, s.c, s.x, s.y, s.base, 30, 80);
    Series slower = hecke_brute(s.a, s.b, s.c, s.x, s.y, s.base, 30, 96);
    CHECK(same(slow, slower));  // box was large enough
    CHECK(same(fast, slow));
  }
}

TEST_CASE("degenerate double-sum coefficients vanish") {
  const Exp O = 60;
  Series d1 = shift(hecke_f(5, 5, 1, qpow(15), qpow(4), qpow(1), O + 8), 8);
  Series d2 = shift(hecke_f(5, 5, 1, qpow(15), qpow(2), qpow(1), O + 3), 3);
  Series first = d2 - d1;
  CHECK(equal_up_to(first, Series::zero(O), O).equal);

  Series e1 = shift(hecke_f(7, 7, 1, qpow(28), qpow(5), qpow(1), O + 15), 15);
  Series e2 = shift(hecke_f(7, 7, 1, qpow(28), qpow(3), qpow(1), O + 8), 8);
  CHECK(equal_up_to(e2 - e1, Series::zero(O), O).equal);

  Series g1 = shift(hecke_f(7, 7, 1, qpow(28), qpow(6), qpow(1), O + 18), 18);
  Series g2 = shift(hecke_f(7, 7, 1, qpow(28), qpow(2), qpow(1), O + 4), 4);
  CHECK(equal_up_to(g2 - g1, Series::zero(O), O).equal);
}

TEST_CASE("functional equation H7eq1.14") {
  SpecGen g;
  const Exp O = 40;
  for (int iter = 0; iter < 60; ++iter) {
    HeckeSpec s = g.spec();
    Series lhs = hecke_f(s, O);
    SignedMonomial pre = SignedMonomial{-1, 0} * s.base.pow(s.a + s.b + s.c) *
                         s.x.inverse() * s.y.inverse();
    Series rhs = mono_series(pre) *
                 hecke_f(s.a, s.b, s.c, s.base.pow(2 * s.a + s.b) * s.x.inverse(),
                         s.base.pow(2 * s.c + s.b) * s.y.inverse(), s.base,
                         O + std::abs(pre.exp) + 4);
    CHECK(same(lhs, rhs, O - 4));
  }
}

TEST_CASE("general functional equation Gen1") {
  SpecGen g;
  const Exp O = 36;
  const std::pair<Exp, Exp> lks[] = {{-1, 5}, {1, 0}, {0, 1}, {-2, 1}};
  for (int iter = 0; iter < 30; ++iter) {
    HeckeSpec s = g.spec();
    Series lhs = hecke_f(s, O);
    for (auto [l, k] : lks) {
      SignedMonomial minus_x{-s.x.sign, s.x.exp}, minus_y{-s.y.sign, s.y.exp};
      SignedMonomial pre = minus_x.pow(l) * minus_y.pow(k) *
                           s.base.pow(s.a * binom2(l) + s.b * l * k + s.c * binom2(k));
      Series rhs = mono_series(pre) *
                   hecke_f(s.a, s.b, s.c, s.base.pow(s.a * l + s.b * k) * s.x,
                           s.base.pow(s.b * l + s.c * k) * s.y, s.base,
                           O + std::abs(pre.exp) + 12);
      rhs = rhs + convention_sum(0, l - 1, [&](Exp m) {
              return mono_series(minus_x.pow(m) * s.base.pow(s.a * binom2(m))) *
                     theta_j(s.base.pow(m * s.b) * s.y, s.base.pow(s.c), O + 12);
            });
      rhs = rhs + convention_sum(0, k - 1, [&](Exp m) {
              return mono_series(minus_y.pow(m) * s.base.pow(s.c * binom2(m))) *
                     theta_j(s.base.pow(m * s.b) * s.x, s.base.pow(s.a), O + 12);
            });
      CHECK(same(lhs, rhs, O - 8));
    }
  }
}

TEST_CASE("corollary specializations fnq-1 and fnq-2") {
  SpecGen g;
  const Exp O = 40;
  for (int iter = 0; iter < 60; ++iter) {
    HeckeSpec s = g.spec();
    Series lhs = hecke_f(s, O);
    Series rhs1 = mono_series(SignedMonomial{-s.y.sign, s.y.exp}) *
                      hecke_f(s.a, s.b, s.c, s.base.pow(s.b) * s.x, s.base.pow(s.c) * s.y,
                              s.base, O + std::abs(s.y.exp) + 4) +
                  theta_j(s.x, s.base.pow(s.a), O);
    CHECK(same(lhs, rhs1, O - 6));
    Series rhs2 = mono_series(SignedMonomial{-s.x.sign, s.x.exp}) *
                      hecke_f(s.a, s.b, s.c, s.base.pow(s.a) * s.x, s.base.pow(s.b) * s.y,
                              s.base, O + std::abs(s.x.exp) + 4) +
                  theta_j(s.y, s.base.pow(s.c), O);
    CHECK(same(lhs, rhs2, O - 6));
  }
}

TEST_CASE("Appell shift laws") {
  std::mt19937 rng(1717);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::uniform_int_distribution<Exp> ed(-3, 4), bd(1, 3);
  const Exp O = 50;
  int valid = 0;
  while (valid < 100) {
    SignedMonomial x{sgn(rng) ? 1 : -1, ed(rng)};
    SignedMonomial z{sgn(rng) ? 1 : -1, ed(rng)};
    SignedMonomial base{1, bd(rng)};
    try {
      Series m0 = appell_m(x, z, base, O);
      // m(x,z;q) = m(x,qz;q)
      Series mz = appell_m(x, base * z, base, O);
      CHECK(same(m0, mz, O - 10));
      // m(x,z;q) = x^{-1} m(x^{-1}, z^{-1}; q)
      Series mflip = mono_series(x.inverse()) *
                     appell_m(x.inverse(), z.inverse(), base, O + std::abs(x.exp) + 2);
      CHECK(same(m0, mflip, O - 10));
      // m(qx,z;q) = 1 - x m(x,z;q)
      Series mqx = appell_m(base * x, z, base, O);
      Series rhs = Series::constant(1) - mono_series(x) * m0;
      CHECK(same(mqx, rhs, O - 10));
      ++valid;
    } catch (const AppellPole&) {
    } catch (const ThetaDenominatorZero&) {
    }
  }
}

TEST_CASE("Appell pole is reported") {
  CHECK_THROWS_AS(appell_m(mono(-1, 1), mono(-1, 1), qpow(1), 20), AppellPole);
  CHECK_THROWS_AS(appell_m(qpow(1), qpow(2), qpow(1), 20), ThetaDenominatorZero);
}

TEST_CASE("changing the z parameter (theta-quotient difference)") {
  const Exp O = 44;
  struct Triple {
    SignedMonomial x, z0, z1, base;
  };
  const Triple triples[] = {
      {qpow(1), mono(-1, 0), mono(-1, 1), qpow(3)},
      {qpow(4), mono(-1, 0), mono(-1, 1), qpow(3)},
      {mono(-1, 1), qpow(1), qpow(2), qpow(3)},
  };
  for (const Triple& t : triples) {
    Series lhs = appell_m(t.x, t.z1, t.base, O) - appell_m(t.x, t.z0, t.base, O);
    Series rhs = ensure_order(
        [&](Exp T) {
          return mono_series(t.z0) * Jsingle_in(1, t.base, T).pow(3) *
                 theta_j(t.z1 * t.z0.inverse(), t.base, T) *
                 theta_j(t.x * t.z0 * t.z1, t.base, T) * theta_j_inverse(t.z0, t.base, T) *
                 theta_j_inverse(t.z1, t.base, T) * theta_j_inverse(t.x * t.z0, t.base, T) *
                 theta_j_inverse(t.x * t.z1, t.base, T);
        },
        O);
    CHECK(same(lhs, rhs, O - 10));
  }
}

TEST_CASE("msplit specialization n=2 at the chi/psi proof arguments") {
  const Exp O = 40;
  SignedMonomial x = mono(-1, 1), z = qpow(1), base = qpow(3);
  Series lhs = appell_m(x, z, base, O);
  SignedMonomial minus_one{-1, 0};
  Series rhs =
      appell_m(minus_one * base * x.pow(2), minus_one, base.pow(4), O) +
      mono_series(minus_one * base.inverse() * x) *
          appell_m(minus_one * base.inverse() * x.pow(2), minus_one, base.pow(4), O + 4);
  Series bracket = ensure_order(
      [&](Exp T) {
        Series term1 = theta_j(base * x.pow(2) * z, base.pow(2), T) *
                       theta_j(minus_one * z.pow(2), base.pow(4), T) *
                       theta_j_inverse(base * x.pow(2), base.pow(2), T) *
                       theta_j_inverse(z, base.pow(2), T);
        Series term2 = mono_series(x * z) *
                       theta_j(base.pow(2) * x.pow(2) * z, base.pow(2), T) *
                       theta_j(minus_one * base.pow(2) * z.pow(2), base.pow(4), T) *
                       theta_j_inverse(base * x.pow(2), base.pow(2), T) *
                       theta_j_inverse(base * z, base.pow(2), T);
        return (term1 - term2) * Jsingle_in(2, base, T).pow(3) *
               theta_j_inverse(x * z, base, T) * theta_j_inverse(minus_one, base.pow(4), T);
      },
      O);
  CHECK(same(lhs, rhs - bracket, O - 8));
}

TEST_CASE("hecke_split matches hecke_f at the catalog arguments") {
  const Exp O = 60;
  struct Case {
    int n;
    SignedMonomial x, y, base;
  };
  const Case cases[] = {
      {5, qpow(9), qpow(4), qpow(1)},
      {7, qpow(10), qpow(3), qpow(1)},
      {4, mono(-1, 23), mono(-1, 13), qpow(4)},
  };
  for (const Case& c : cases) {
    HeckeSplit split = hecke_split(c.n, c.x, c.y, c.base, O);
    Series denom_inv = ensure_order(
        [&](Exp T) {
          return theta_j_inverse(mono(-1, 0), c.base.pow(c.n - 1), T) *
                 theta_j_inverse(mono(-1, 0), c.base.pow(c.n * (c.n - 1)), T);
        },
        O);
    Series rhs = split.h - split.theta_part * denom_inv;
    Series lhs = hecke_f(c.n, c.n, 1, c.x, c.y, c.base, O);
    CHECK(same(lhs, rhs, O));
  }
}

TEST_CASE("general Appell sums (Lemma)") {
  const Exp O = 40;
  SignedMonomial minus_one{-1, 0};
  for (Exp s = 0; s <= 6; ++s) {
    // m(-q^{1+4s},-1;q^4) - q^{2s-1} m(-q^{-1+4s},-1;q^4)
    Series lhs1 =
        appell_m(mono(-1, 1 + 4 * s), minus_one, qpow(4), O) -
        shift(appell_m(mono(-1, -1 + 4 * s), minus_one, qpow(4), O + std::abs(2 * s - 1) + 2),
              2 * s - 1);
    Series rhs1 = convention_sum(0, 2 * s - 1,
                                 [&](Exp k) {
                                   return Series::monomial(Rational((k % 2 != 0) ? -1 : 1),
                                                           2 * s * k - binom2(k + 1));
                                 }) +
                  scale(shift(appell_m(mono(-1, 1), minus_one, qpow(4),
                                       O + s + 4 * binom2(s) + 2),
                              s + 4 * binom2(s)),
                        Rational(2));
    CHECK(same(lhs1, rhs1, O - 6));

    // m(-q^{1+6s},-1;q^6) - q^{2s-1} m(-q^{-1+6s},-1;q^6)
    Series lhs2 =
        appell_m(mono(-1, 1 + 6 * s), minus_one, qpow(6), O) -
        shift(appell_m(mono(-1, -1 + 6 * s), minus_one, qpow(6), O + std::abs(2 * s - 1) + 2),
              2 * s - 1);
    Series rhs2 = convention_sum(0, s - 1,
                                 [&](Exp k) {
                                   return shift(Series::monomial(Rational(1), k) -
                                                    Series::monomial(Rational(1), -k + 2 * s - 1),
                                                6 * s * k - 6 * binom2(k + 1));
                                 }) +
                  scale(shift(appell_m(mono(-1, 1), minus_one, qpow(6),
                                       O + s + 6 * binom2(s) + 2),
                              s + 6 * binom2(s)),
                        Rational(2));
    CHECK(same(lhs2, rhs2, O - 6));

    // m(-q^{2+6s},-1;q^6) - q^{4s-2} m(-q^{-2+6s},-1;q^6)
    Series lhs3 =
        appell_m(mono(-1, 2 + 6 * s), minus_one, qpow(6), O) -
        shift(appell_m(mono(-1, -2 + 6 * s), minus_one, qpow(6), O + std::abs(4 * s - 2) + 2),
              4 * s - 2);
    Series rhs3 = convention_sum(0, s - 1,
                                 [&](Exp k) {
                                   return shift(Series::monomial(Rational(1), 2 * k) -
                                                    Series::monomial(Rational(1), -2 * k + 4 * s - 2),
                                                6 * s * k - 6 * binom2(k + 1));
                                 }) +
                  scale(shift(appell_m(mono(-1, 2), minus_one, qpow(6),
                                       O + 2 * s + 6 * binom2(s) + 2),
                              2 * s + 6 * binom2(s)),
                        Rational(2));
    CHECK(same(lhs3, rhs3, O - 6));
  }
}
