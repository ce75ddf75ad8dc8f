#include <catch2/catch_amalgamated.hpp>

#include "qseries/stringfn.hpp"

using namespace qseries;

namespace {

bool same(const Series& a, const Series& b, Exp cap = Series::kExactOrder) {
  Exp O = std::min({a.order(), b.order(), cap});
  return equal_up_to(a, b, O).equal;
}

Rational s_lambda(Exp p, Exp pprime, Exp m, Exp ell) {
  Rational N = Rational(pprime, p) - 2;
  return Rational(-1, 8) + Rational((ell + 1) * (ell + 1)) / (4 * (N + 2)) -
         Rational(m * m) / (4 * N);
}

Series euler_inf(Exp O) { return pochhammer(qpow(1), std::nullopt, qpow(1), O); }

}  // namespace

TEST_CASE("Kac-Peterson closed forms with exact offset cancellation") {
  const Exp O = 60;

  SECTION("level 1: C_{0,0} is the partition generating function") {
    // C = eta^{-1} = q^{-1/24} (q)_inf^{-1}; s_lambda = -1/24 cancels it.
    CHECK(s_lambda(1, 3, 0, 0) == Rational(-1, 24));
    Series c = string_c(1, 3, 0, 0, O);
    CHECK(same(c, invert(euler_inf(O))));
    CHECK(coefficient_at(c, 6) == 11);
  }

  SECTION("level 2: C_{1,1} = eta(q)^{-2} eta(q^2)") {
    Rational total = Rational(-2, 24) + Rational(2, 24) - s_lambda(1, 4, 1, 1);
    CHECK(total == 0);
    Series rhs = invert(euler_inf(O)).pow(2).truncated(O) * Jsingle(2, O);
    CHECK(same(string_c(1, 4, 1, 1, O), rhs, O));
  }

  SECTION("level 3: C_{1,1} = eta(q)^{-2} q^{3/40} J_{6,15}") {
    Rational total = Rational(-2, 24) + Rational(3, 40) - s_lambda(1, 5, 1, 1);
    CHECK(total == 0);
    Series rhs = invert(euler_inf(O)).pow(2).truncated(O) * J(6, 15, O);
    CHECK(same(string_c(1, 5, 1, 1, O), rhs, O));
  }

  SECTION("level 4: C_{2,0} = eta(q)^{-2} eta(q^6)^{-1} eta(q^12)^2") {
    Rational total = Rational(-2, 24) + Rational(-6, 24) + Rational(24, 24) -
                     s_lambda(1, 6, 2, 0);
    CHECK(denominator(total) == 1);
    CHECK(total == 1);
    Series rhs = shift(invert(euler_inf(O)).pow(2).truncated(O) *
                           invert(Jsingle(6, O)) * Jsingle(12, O).pow(2),
                       1);
    CHECK(same(string_c(1, 6, 2, 0, O), rhs, O));
    CHECK(same(string_c_integral(4, 2, 0, O), rhs, O));
  }
}

TEST_CASE("integral compact form agrees with the double-sum difference") {
  const Exp O = 30;
  for (Exp N = 1; N <= 3; ++N) {
    for (Exp ell = 0; ell <= N; ++ell) {
      for (Exp m = (ell % 2) ? -5 : -4; m <= 5; m += 2) {
        Series a = string_c_integral(N, m, ell, O);
        Series b = string_c(1, N + 2, m, ell, O);
        INFO("N=" << N << " m=" << m << " ell=" << ell);
        CHECK(same(a, b, O));
      }
    }
  }
}

TEST_CASE("string_c parameter validation") {
  CHECK_THROWS_AS(string_c(2, 4, 0, 0, 10), Error);  // not coprime
  CHECK_THROWS_AS(string_c(1, 3, 1, 0, 10), Error);  // parity
  CHECK_THROWS_AS(string_c(1, 3, 2, 2, 10), Error);  // spin range
  CHECK_THROWS_AS(string_c(3, 2, 0, 0, 10), Error);  // pprime <= p
  CHECK_THROWS_AS(string_c_integral(0, 0, 0, 10), Error);
}

TEST_CASE("generalized Euler identity instances") {
  const Exp O = 40;
  Series one = gen_euler_check(1, 3, 0, 0, O);
  CHECK(same(one, Series::constant(1, O)));
  Series zero = gen_euler_check(2, 5, 0, 2, O);
  CHECK(same(zero, Series::zero(O)));
  Series one38 = gen_euler_check(3, 8, 2, 2, O);
  CHECK(same(one38, Series::constant(1, O)));
  Series zero37 = gen_euler_check(3, 7, 1, 3, O);
  CHECK(same(zero37, Series::zero(O)));
}

TEST_CASE("integral-level generalized Euler identity with theta coefficients") {
  const Exp O = 36;
  for (Exp N = 1; N <= 3; ++N) {
    for (Exp r = 0; 2 * r <= N; ++r) {
      for (Exp s = 0; 2 * s <= N + 1; ++s) {
        Series acc(0, O);
        for (Exp a = 0; a < N; ++a) {
          int outer = (a % 2) ? -1 : 1;
          SignedMonomial arg = SignedMonomial{(N % 2) ? 1 : -1,
                                              N * a + binom2(N + 1) + 2 * (a + s)};
          Series term = theta_j(arg, qpow(N * (N + 2)), O) *
                        string_c_integral(N, 2 * (a + s), 2 * r, O);
          acc = acc + scale(shift(term.truncated(O - binom2(a)), binom2(a)),
                            Rational(outer));
        }
        INFO("N=" << N << " r=" << r << " s=" << s);
        CHECK(same(acc, Series::constant(r == s ? 1 : 0, O), O));
      }
    }
  }
}

TEST_CASE("quasi-periodicity deltas vanish") {
  SECTION("t = 0 is identically zero") {
    Series d = quasi_period_delta(Spin::Even, 2, 1, 0, 0, 0, 30);
    CHECK(same(d, Series::zero(30)));
    Series od = quasi_period_delta(Spin::Odd, 3, 2, 0, 1, 0, 30);
    CHECK(same(od, Series::zero(30)));
  }
  SECTION("even spin (p,j)=(2,1), t=1") {
    Series d = quasi_period_delta(Spin::Even, 2, 1, 1, 0, 0, 40);
    CHECK(same(d, Series::zero(std::min(d.order(), Exp(40)))));
  }
  SECTION("odd spin (p,j)=(3,2), t=2, r=1") {
    Series d = quasi_period_delta(Spin::Odd, 3, 2, 2, 0, 1, 40);
    CHECK(same(d, Series::zero(std::min(d.order(), Exp(40)))));
  }
  SECTION("sweep small parameters") {
    const Exp O = 24;
    for (auto [p, j] : {std::pair<Exp, Exp>{2, 1}, {3, 1}, {3, 2}}) {
      for (Exp t = 0; t <= 2; ++t) {
        for (Exp s = 0; s < j; ++s) {
          for (Exp r = 0; 2 * r + 1 < 2 * p + j - 1; ++r) {
            INFO("p=" << p << " j=" << j << " t=" << t << " s=" << s << " r=" << r);
            Series de = quasi_period_delta(Spin::Even, p, j, t, s, r, O);
            CHECK(same(de, Series::zero(std::min(de.order(), O))));
            Series dox = quasi_period_delta(Spin::Odd, p, j, t, s, r, O);
            CHECK(same(dox, Series::zero(std::min(dox.order(), O))));
          }
        }
      }
    }
  }
}

TEST_CASE("Weyl-Kac oracle matches the Hecke form") {
  const Exp O = 30;
  SECTION("(1,3) vacuum") {
    auto res = weyl_kac_oracle(1, 3, 0, {0}, O);
    CHECK(same(res.at(0).body, string_c(1, 3, 0, 0, O), O));
    CHECK(res.at(0).offset == Rational(-1, 24));
  }
  SECTION("(2,5) window {0, 2, -2}") {
    auto res = weyl_kac_oracle(2, 5, 0, {0, 2, -2}, O);
    CHECK(same(res.at(0).body, string_c(2, 5, 0, 0, O), O));
    CHECK(same(res.at(2).body, string_c(2, 5, 2, 0, O), O));
    CHECK(same(res.at(2).body, res.at(-2).body, O));  // C_{m} = C_{-m}
  }
  SECTION("all catalog pairs, |m| <= 6") {
    const Exp Osmall = 20;
    for (auto [p, pp] : {std::pair<Exp, Exp>{1, 3}, {2, 5}, {3, 7}, {3, 8}}) {
      for (Exp ell = 0; ell <= pp - 2; ++ell) {
        std::vector<Exp> window;
        for (Exp m = -6 + ((ell % 2) ? 1 : 0); m <= 6; m += 2) window.push_back(m);
        auto res = weyl_kac_oracle(p, pp, ell, window, Osmall);
        for (Exp m : window) {
          INFO("p=" << p << " pp=" << pp << " ell=" << ell << " m=" << m);
          CHECK(same(res.at(m).body, string_c(p, pp, m, ell, Osmall), Osmall));
        }
      }
    }
  }
}

TEST_CASE("string function symmetries") {
  const Exp O = 30;
  SECTION("m -> -m") {
    for (auto [p, pp] : {std::pair<Exp, Exp>{2, 5}, {3, 7}, {3, 8}}) {
      for (Exp ell = 0; ell <= pp - 2; ++ell) {
        for (Exp m = (ell % 2) ? 1 : 0; m <= 5; m += 2) {
          CHECK(same(string_c(p, pp, m, ell, O), string_c(p, pp, -m, ell, O), O));
        }
      }
    }
  }
  SECTION("(m,ell) -> (N-m, N-ell) at integral level, with computed shift") {
    for (Exp N = 1; N <= 4; ++N) {
      for (Exp ell = 0; ell <= N; ++ell) {
        for (Exp m = (ell % 2) ? 1 : 0; m <= N; m += 2) {
          Rational delta = s_lambda(1, N + 2, m, ell) - s_lambda(1, N + 2, N - m, N - ell);
          REQUIRE(denominator(delta) == 1);
          Exp d = static_cast<Exp>(numerator(delta).convert_to<long long>());
          Series lhs = string_c_integral(N, N - m, N - ell, O);
          Series rhs = shift(string_c_integral(N, m, ell, O - d), d);
          INFO("N=" << N << " m=" << m << " ell=" << ell << " shift=" << d);
          CHECK(same(lhs, rhs, O - std::abs(d)));
        }
      }
    }
  }
  SECTION("integral-level periodicity m -> m + 2N") {
    for (Exp N = 1; N <= 3; ++N) {
      for (Exp ell = 0; ell <= N; ++ell) {
        for (Exp m = (ell % 2) ? 1 : 0; m <= 3; m += 2) {
          Rational delta = s_lambda(1, N + 2, m, ell) - s_lambda(1, N + 2, m + 2 * N, ell);
          REQUIRE(denominator(delta) == 1);
          Exp d = static_cast<Exp>(numerator(delta).convert_to<long long>());
          CHECK(d == m + N);
          Series lhs = string_c_integral(N, m + 2 * N, ell, O);
          Series rhs = shift(string_c_integral(N, m, ell, O - d), d);
          CHECK(same(lhs, rhs, O - std::abs(d)));
        }
      }
    }
  }
}

TEST_CASE("oracle rejects bad windows and negative levels") {
  CHECK_THROWS_AS(weyl_kac_oracle(3, 4, 0, {0}, 10), Error);
  CHECK_THROWS_AS(weyl_kac_oracle(2, 5, 0, {1}, 10), Error);  // parity
}
