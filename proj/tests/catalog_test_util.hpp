#ifndef QSERIES_TESTS_CATALOG_TEST_UTIL_HPP_
#define QSERIES_TESTS_CATALOG_TEST_UTIL_HPP_

#include "qseries/catalog.hpp"

namespace qseries::testutil {

// Clone the tree with the first non-unit rational literal (DFS order)
// bumped by one; +-1 literals are sign scaffolding and stay fixed.
inline ExprPtr bump_first_rational(const ExprPtr& e, bool& done) {
  if (done) return e;
  auto clone = std::make_shared<Expr>(*e);
  if (e->kind == Expr::Kind::Rational && e->value != 1 && e->value != -1) {
    clone->value = e->value + 1;
    done = true;
    return clone;
  }
  for (std::size_t i = 0; i < clone->kids.size() && !done; ++i)
    clone->kids[i] = bump_first_rational(clone->kids[i], done);
  return clone;
}

struct MutationFixture {
  const char* name;
  Exp expected_exponent;
  const char* expected_delta;
};

// Frozen regression fixtures: discrepancy exponents observed for the
// unit-perturbed entries at order 60.
inline const std::vector<MutationFixture>& mutation_fixtures() {
  static const std::vector<MutationFixture> rows = {
      {"evenspin_genEulerOneHalfCor", 0, "-1"},
      {"mock_mu2", 0, "-1/2"},
      {"mock_f3", 2, "1"},
      {"hm_altAppell_omega", 1, "-1"},
      {"hm_altAppell_f3", 0, "-1"},
      {"section6_level12EvenSpinThetaId", 0, "1"},
      {"bg_mockThetaConj2502r", 0, "-1"},
      {"evenspin_genEulerOneHalf", 0, "-1"},
      {"sec5_rearrJbar01a", 0, "-1"},
      {"oddspin_genEulerTwoThirdsA", 2, "-1"},
  };
  return rows;
}

}  // namespace qseries::testutil

#endif  // QSERIES_TESTS_CATALOG_TEST_UTIL_HPP_
