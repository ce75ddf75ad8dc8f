#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "catalog_test_util.hpp"

using namespace qseries;

namespace {

Catalog& shared_catalog() {
  static Catalog catalog;
  return catalog;
}

std::size_t instance_count(const Catalog& c, const std::string& pattern) {
  std::size_t n = 0;
  for (const Identity* id : c.list(pattern)) n += assignments(*id).size();
  return n;
}

}  // namespace

TEST_CASE("catalog structure") {
  Catalog& c = shared_catalog();
  CHECK(c.all().size() >= 60);
  CHECK(instance_count(c, "all") >= 300);
  for (const Identity& id : c.all()) {
    INFO(id.name);
    CHECK_FALSE(id.anchor.empty());
  }
  CHECK(c.list("level12*").size() >= 4);
  CHECK(c.list("section6*").size() == 12);
  CHECK(c.list("no_such_entry_zzz").empty());
}

TEST_CASE("catalog parses and round-trips through the printer") {
  Catalog& c = shared_catalog();
  for (const Identity& id : c.all()) {
    INFO(id.name);
    std::string printed = print_identity(id);
    Identity again = parse_identity(printed);
    CHECK(print_identity(again) == printed);
  }
}

TEST_CASE("parameter skip lists are honored") {
  Catalog& c = shared_catalog();
  const Identity* split4 = c.find("hm_heckeSplit_n4");
  REQUIRE(split4 != nullptr);
  for (const Bindings& b : assignments(*split4)) CHECK(b.at("t") != 11);
  const Identity* sec6 = c.find("section6_level12EvenSpinThetaId");
  REQUIRE(sec6 != nullptr);
  for (const Bindings& b : assignments(*sec6)) CHECK(b.at("s") != 2);
}

TEST_CASE("verify examples from the contract") {
  Catalog& c = shared_catalog();
  SECTION("1/2-level corollary passes at order 80") {
    const Identity* id = c.find("evenspin_genEulerOneHalfCor");
    REQUIRE(id != nullptr);
    Report rep = verify(*id, {}, 80);
    CHECK(rep.status == Report::Status::Pass);
    CHECK(rep.order == 80);
  }
  SECTION("replacing 1/2 by 1/3 fails with a small discrepancy exponent") {
    const Identity* id = c.find("evenspin_genEulerOneHalfCor");
    Identity broken = *id;
    // rhs = 1/2 * j(...) * mu2(q) - ... ; rebuild with 1/3
    std::string text = print_expr(broken.rhs);
    auto pos = text.find("1/2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 3, "1/3");
    broken.rhs = parse_expression(text);
    Report rep = verify(broken, {}, 60);
    CHECK(rep.status == Report::Status::Fail);
    CHECK(rep.discrepancy_exponent <= 20);
  }
  SECTION("degenerate lemma passes at order 100 with zero right side") {
    const Identity* id = c.find("deg_OneHalfEvenSpin");
    REQUIRE(id != nullptr);
    Report rep = verify(*id, {}, 100);
    CHECK(rep.status == Report::Status::Pass);
  }
}

TEST_CASE("section6 suite verifies") {
  SuiteSummary s = verify_suite(shared_catalog(), "section6*", 20, 2);
  CHECK(s.failed == 0);
  CHECK(s.errors == 0);
  std::set<std::string> names;
  for (const Report& r : s.reports) names.insert(r.name);
  CHECK(names.size() == 12);
}

TEST_CASE("mutation sensitivity regression fixtures") {
  Catalog& c = shared_catalog();
  for (const auto& fx : testutil::mutation_fixtures()) {
    const Identity* id = c.find(fx.name);
    REQUIRE(id != nullptr);
    Identity mutated = *id;
    bool done = false;
    mutated.rhs = testutil::bump_first_rational(mutated.rhs, done);
    REQUIRE(done);
    Report rep = verify(mutated, assignments(mutated).front(), 60);
    INFO(fx.name);
    CHECK(rep.status == Report::Status::Fail);
    CHECK(rep.discrepancy_exponent == fx.expected_exponent);
    CHECK(rep.delta == Rational(std::string(fx.expected_delta)));
  }
}

TEST_CASE("suite summaries are byte-identical across parallelism") {
  Catalog& c = shared_catalog();
  SuiteSummary s1 = verify_suite(c, "sec5*", 24, 1);
  SuiteSummary s8 = verify_suite(c, "sec5*", 24, 8);
  std::ostringstream r1, r8;
  write_report(r1, s1);
  write_report(r8, s8);
  CHECK(r1.str() == r8.str());
  CHECK(s1.failed == 0);
  CHECK(s1.errors == 0);
}

TEST_CASE("passing instances stay green at lower orders") {
  Catalog& c = shared_catalog();
  const char* names[] = {"mock_chi3", "evenspin_genEulerOneThirdCorB",
                         "oddspin_genEulerOneHalf", "sw_intLevelGenEuler_N2"};
  for (const char* name : names) {
    const Identity* id = c.find(name);
    REQUIRE(id != nullptr);
    Bindings b = assignments(*id).front();
    for (Exp O : {Exp(10), Exp(20), Exp(32)}) {
      Report rep = verify(*id, b, O);
      INFO(name << " at O=" << O);
      CHECK(rep.status == Report::Status::Pass);
    }
  }
}

TEST_CASE("completeness manifest covers every in-scope result") {
  Catalog& c = shared_catalog();
  for (const ManifestRow& row : completeness_manifest()) {
    INFO(row.label << " -> " << row.pattern);
    CHECK_FALSE(c.list(row.pattern).empty());
  }
}

TEST_CASE("report format carries the contract fields") {
  Report r;
  r.name = "demo";
  r.params["s"] = 2;
  r.order = 40;
  r.status = Report::Status::Fail;
  r.discrepancy_exponent = 7;
  r.delta = Rational(-3, 2);
  std::string line = format_report_line(r);
  CHECK(line.find("name=demo") != std::string::npos);
  CHECK(line.find("params=s=2") != std::string::npos);
  CHECK(line.find("order=40") != std::string::npos);
  CHECK(line.find("status=fail") != std::string::npos);
  CHECK(line.find("discrepancy_exponent=7") != std::string::npos);
  CHECK(line.find("delta_numerator=-3") != std::string::npos);
  CHECK(line.find("delta_denominator=2") != std::string::npos);
}

TEST_CASE("identity files verify through the same path") {
  std::string text =
      "# user identity file\n"
      "identity userEuler params b in 0..1\n"
      "  lhs = genEuler[1,3](0,2*b)\n"
      "  rhs = delta(0,b)\n";
  std::vector<Identity> ids = parse_identities(text);
  REQUIRE(ids.size() == 1);
  for (const Bindings& b : assignments(ids[0])) {
    Report rep = verify(ids[0], b, 30);
    CHECK(rep.status == Report::Status::Pass);
  }
}
