#ifndef QSERIES_CATALOG_HPP_
#define QSERIES_CATALOG_HPP_

#include <atomic>
#include <chrono>
#include <ostream>
#include <sstream>
#include <thread>

#include "qseries/catalog_entries.hpp"
#include "qseries/expr.hpp"

namespace qseries {

// Verification outcome for one (identity, parameter assignment) instance.
struct Report {
  std::string name;
  Bindings params;
  Exp order = 0;  // order actually checked
  enum class Status { Pass, Fail, Error } status = Status::Pass;
  Exp discrepancy_exponent = 0;
  Rational delta;  // lhs - rhs at the first discrepancy
  std::string message;
};

struct SuiteSummary {
  std::vector<Report> reports;
  std::size_t passed = 0, failed = 0, errors = 0;
  double wall_seconds = 0.0;
};

class Catalog {
 public:
  Catalog() {
    for (const auto& raw : builtin_entries()) {
      Identity id = parse_identity(raw.text);
      id.anchor = raw.anchor;
      id.default_order = raw.order;
      if (id.name != raw.name)
        throw Error("catalog: entry name mismatch for " + std::string(raw.name));
      entries_.push_back(std::move(id));
    }
  }

  const std::vector<Identity>& all() const { return entries_; }

  const Identity* find(const std::string& name) const {
    for (const auto& id : entries_)
      if (id.name == name) return &id;
    return nullptr;
  }

  // Unanchored glob: '*' matches any run of characters, '?' one character;
  // a pattern matches if it matches some substring of the name.  "all" and
  // "" select everything.
  static bool matches(const std::string& pattern, const std::string& name) {
    if (pattern.empty() || pattern == "all" || pattern == "*") return true;
    for (std::size_t start = 0; start <= name.size(); ++start)
      if (glob_here(pattern, 0, name, start)) return true;
    return false;
  }

  std::vector<const Identity*> list(const std::string& pattern) const {
    std::vector<const Identity*> out;
    for (const auto& id : entries_)
      if (matches(pattern, id.name)) out.push_back(&id);
    return out;
  }

 private:
  static bool glob_here(const std::string& p, std::size_t pi, const std::string& s,
                        std::size_t si) {
    if (pi == p.size()) return true;
    if (p[pi] == '*') {
      for (std::size_t k = si; k <= s.size(); ++k)
        if (glob_here(p, pi + 1, s, k)) return true;
      return false;
    }
    if (si == s.size()) return false;
    if (p[pi] == '?' || p[pi] == s[si]) return glob_here(p, pi + 1, s, si + 1);
    return false;
  }

  std::vector<Identity> entries_;
};

// All in-range parameter assignments, in declaration order with each
// parameter swept low to high (deterministic enumeration).
inline std::vector<Bindings> assignments(const Identity& id) {
  std::vector<Bindings> out{Bindings{}};
  for (const auto& p : id.params) {
    std::vector<Bindings> next;
    for (Int v = p.lo; v <= p.hi; ++v) {
      if (std::find(p.skip.begin(), p.skip.end(), v) != p.skip.end()) continue;
      for (const auto& base : out) {
        Bindings b = base;
        b[p.name] = v;
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Evaluate both sides and compare up to min(O, both validity windows).
// Negative-content quotients can shrink windows below O, in which case the
// evaluation order is raised and the comparison retried.
inline Report verify(const Identity& id, const Bindings& params, Exp O) {
  Report rep;
  rep.name = id.name;
  rep.params = params;
  try {
    Exp boost = 0;
    for (int attempt = 0;; ++attempt) {
      Series lhs = evaluate(id.lhs, params, O + boost);
      Series rhs = evaluate(id.rhs, params, O + boost);
      Exp cmp = std::min({O, lhs.order(), rhs.order()});
      if (cmp < O && attempt < 4) {
        boost += std::max<Exp>(16, O - cmp);
        continue;
      }
      rep.order = cmp;
      Comparison c = equal_up_to(lhs, rhs, cmp);
      if (c.equal) {
        rep.status = Report::Status::Pass;
      } else {
        rep.status = Report::Status::Fail;
        rep.discrepancy_exponent = c.first_discrepancy;
        rep.delta = c.delta;
      }
      return rep;
    }
  } catch (const std::exception& e) {
    rep.status = Report::Status::Error;
    rep.message = e.what();
    std::string ctx = "identity " + id.name + " at ";
    for (const auto& [k, v] : params) ctx += k + "=" + v.str() + " ";
    rep.message = ctx + ": " + rep.message;
    return rep;
  }
}

// Run all matching instances, optionally in parallel; the aggregate is
// deterministic regardless of schedule because results land in preassigned
// slots and the instance list itself is deterministic.
inline SuiteSummary verify_suite(const Catalog& catalog, const std::string& pattern,
                                 Exp O, unsigned parallelism = 1) {
  auto t0 = std::chrono::steady_clock::now();
  struct Job {
    const Identity* id;
    Bindings params;
  };
  std::vector<Job> jobs;
  for (const Identity* id : catalog.list(pattern))
    for (auto& b : assignments(*id)) jobs.push_back({id, std::move(b)});

  SuiteSummary summary;
  summary.reports.resize(jobs.size());
  if (parallelism < 1) parallelism = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      summary.reports[i] = verify(*jobs[i].id, jobs[i].params, O);
    }
  };
  if (parallelism == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < parallelism; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // failures first in the report ordering
  std::stable_sort(summary.reports.begin(), summary.reports.end(),
                   [](const Report& a, const Report& b) {
                     auto rank = [](const Report& r) {
                       return r.status == Report::Status::Pass ? 1 : 0;
                     };
                     return rank(a) < rank(b);
                   });
  for (const Report& r : summary.reports) {
    if (r.status == Report::Status::Pass) ++summary.passed;
    else if (r.status == Report::Status::Fail) ++summary.failed;
    else ++summary.errors;
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

// Line-oriented report record; wall time deliberately stays out of the
// serialized form so reports are byte-identical across --jobs settings.
inline std::string format_report_line(const Report& r) {
  std::ostringstream os;
  os << "name=" << r.name << " params=";
  if (r.params.empty()) {
    os << "-";
  } else {
    bool first = true;
    for (const auto& [k, v] : r.params) {
      if (!first) os << ",";
      os << k << "=" << v.str();
      first = false;
    }
  }
  os << " order=" << r.order << " status=";
  switch (r.status) {
    case Report::Status::Pass: os << "pass"; break;
    case Report::Status::Fail:
      os << "fail discrepancy_exponent=" << r.discrepancy_exponent
         << " delta_numerator=" << numerator(r.delta).str()
         << " delta_denominator=" << denominator(r.delta).str();
      break;
    case Report::Status::Error: {
      std::string msg = r.message;
      for (char& c : msg)
        if (c == '\n') c = ' ';
      os << "error message=\"" << msg << "\"";
      break;
    }
  }
  return os.str();
}

inline void write_report(std::ostream& os, const SuiteSummary& s) {
  for (const Report& r : s.reports) os << format_report_line(r) << "\n";
  os << "summary: instances=" << s.reports.size() << " pass=" << s.passed
     << " fail=" << s.failed << " error=" << s.errors << "\n";
}

// Machine-readable completeness manifest: every in-scope result label maps
// to a name pattern that must select at least one catalog entry.
struct ManifestRow {
  const char* label;
  const char* pattern;
};

inline const std::vector<ManifestRow>& completeness_manifest() {
  static const std::vector<ManifestRow> rows = {
      {"JTPid-sum-vs-product", "sec5_quintuple"},
      {"j-elliptic", "sec5_thetaElliptic"},
      {"j-flip", "sec5_thetaFlip"},
      {"j-split", "sec5_thetaSplitM3"},
      {"j-split-m2", "sec5_thetaSplitM2"},
      {"eq-1.10", "sec5_theta110*"},
      {"eq-1.11", "sec5_theta111"},
      {"eq-1.12", "sec5_theta112*"},
      {"H1Thm1.0-quintuple", "sec5_quintuple*"},
      {"product-rearrangements", "sec5_rearr*"},
      {"HM-Prop6.2-H7eq1.14", "hm_H7eq114"},
      {"HM-Prop6.3-Gen1", "hm_Gen1_*"},
      {"HM-Cor6.4-fnq", "hm_fnq*"},
      {"HM-Appell-Prop3.1", "hm_mxqz_*"},
      {"HM-Thm3.3-changing-z", "hm_changingZ_*"},
      {"HM-msplit-n2", "hm_msplit*"},
      {"main-acdivb-f441", "hm_heckeSplit_n4"},
      {"main-acdivb-f551", "hm_heckeSplit_n5"},
      {"main-acdivb-f771", "hm_heckeSplit_n7"},
      {"degenerateDoubleSumCoeffs", "deg_*"},
      {"generalAppellSums", "hm_generalAppellSum*"},
      {"alternateAppellForms", "hm_altAppell_*"},
      {"alternateAppellFormsChiPsi", "hm_altAppellChi*"},
      {"2nd-mu(q)", "mock_mu2"},
      {"2nd-mu(q)Alt", "mock_mu2Alt"},
      {"3rd-f(q)", "mock_f3"},
      {"3rd-omega(q)", "mock_omega3"},
      {"3rd-psi(q)", "mock_psi3"},
      {"3rd-chi(q)", "mock_chi3"},
      {"universal-g3-conjectures", "g3_mockConj_*"},
      {"SW-Prop8.2-genEulerIdentity", "sw_genEuler_*"},
      {"intLevelGenEulerEvenSpin", "sw_intLevelGenEuler_*"},
      {"genEulerIdentityEvenSpin", "evenspin_genEulerIdentity_*"},
      {"genEulerIdentityEvenSpinCorollary", "evenspin_genEulerIdentityCorollary_*"},
      {"levelOneHalfEvenSpin", "evenspin_levelOneHalf"},
      {"genEulerOneHalfEvenSpin", "evenspin_genEulerOneHalf"},
      {"genEulerOneHalfEvenSpinCorollary", "evenspin_genEulerOneHalfCor"},
      {"levelOneThirdEvenSpin", "evenspin_levelOneThird"},
      {"genEulerOneThirdFirstPairEvenSpin", "evenspin_genEulerOneThirdFirstPair"},
      {"genEulerOneThirdSecondPairEvenSpin", "evenspin_genEulerOneThirdSecondPair"},
      {"genEulerOneThirdEvenSpinCorollary", "evenspin_genEulerOneThirdCor*"},
      {"oneThirdCommonBaseRewrites", "evenspin_oneThirdCommonBase*"},
      {"levelTwoThirdsEvenSpin", "evenspin_levelTwoThirds"},
      {"level23EvenSpinFirstQuad-sEven", "evenspin_level23FirstQuad_sEven"},
      {"level23EvenSpinFirstQuad-sOdd", "evenspin_level23FirstQuad_sOdd"},
      {"level23EvenSpinSecondQuad-sEven", "evenspin_level23SecondQuad_sEven"},
      {"level23EvenSpinSecondQuad-sOdd", "evenspin_level23SecondQuad_sOdd"},
      {"genEulerTwoThirdsEvenSpin", "evenspin_genEulerTwoThirdsCor*"},
      {"twoThirdsCommonBaseRewrites", "evenspin_twoThirdsCommonBase*"},
      {"generalQuasiPeriodicityEvenSpin", "quasiPeriodicity_even_*"},
      {"generalQuasiPeriodicityOddSpin", "quasiPeriodicity_odd_*"},
      {"genEulerIdentityOddSpin", "oddspin_genEulerIdentity_*"},
      {"genEulerIdentityOddSpinCorollary", "oddspin_genEulerIdentityCorollary_*"},
      {"levelOneHalfOddSpin", "oddspin_levelOneHalf"},
      {"genEulerOneHalfOddSpin", "oddspin_genEulerOneHalf"},
      {"levelOneThirdOddSpin", "oddspin_levelOneThird"},
      {"genEulerOneThirdOddSpin", "oddspin_genEulerOneThird*"},
      {"genEulerOneThirdOddSpinRemark", "oddspin_oneThirdRemark*"},
      {"levelTwoThirdsOddSpin", "oddspin_levelTwoThirds"},
      {"genEulerTwoThirdsOddSpin", "oddspin_genEulerTwoThirds*"},
      {"fractionalLevelPlus12alt", "bg_fracLevel12alt_*"},
      {"newMockThetaIdentitiespP37m0ell2r", "bg_pP37m0ell2r"},
      {"newMockThetaIdentitiespP38m0ell2r", "bg_pP38m0ell2r"},
      {"newMockThetaIdentitiespP38m2ell2r", "bg_pP38m2ell2r"},
      {"mockThetaConj2502r-2ndmu", "bg_mockThetaConj2502r"},
      {"section6-level12EvenSpinThetaId", "section6_level12EvenSpinThetaId"},
      {"section6-level13EvenSpinFirstPairThetaId", "section6_level13EvenSpinFirstPairThetaId"},
      {"section6-level13EvenSpinSecondPairThetaId", "section6_level13EvenSpinSecondPairThetaId"},
      {"section6-level23EvenSpinFirstQuad-sEvenThetaId", "section6_level23EvenSpinFirstQuad_sEvenThetaId"},
      {"section6-level23EvenSpinFirstQuad-sOddThetaId", "section6_level23EvenSpinFirstQuad_sOddThetaId"},
      {"section6-level23EvenSpinSecondQuad-sEvenThetaId", "section6_level23EvenSpinSecondQuad_sEvenThetaId"},
      {"section6-level23EvenSpinSecondQuad-sOddThetaId", "section6_level23EvenSpinSecondQuad_sOddThetaId"},
      {"section6-level12OddSpinThetaId", "section6_level12OddSpinThetaId"},
      {"section6-level13OddSpinFirstPairThetaId", "section6_level13OddSpinFirstPairThetaId"},
      {"section6-level13OddSpinSecondPairThetaId", "section6_level13OddSpinSecondPairThetaId"},
      {"section6-level23OddSpinFirstQuadThetaId", "section6_level23OddSpinFirstQuadThetaId"},
      {"section6-level23OddSpinSecondQuadThetaId", "section6_level23OddSpinSecondQuadThetaId"},
      {"section9-level12evenSpinFuncEqn", "section9_level12FuncEqn_*"},
      {"section9-level13evenSpinFirstPairFuncEqn", "section9_level13FirstPairFuncEqn_*"},
      {"section9-level23evenSpinFirstQuad-sEvenFuncEqn", "section9_level23FirstQuad_sEvenFuncEqn_*"},
  };
  return rows;
}

}  // namespace qseries

#endif  // QSERIES_CATALOG_HPP_
