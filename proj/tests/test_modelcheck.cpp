#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <string>

#include "bpair/modelcheck.hpp"
#include "bpair/topology.hpp"

using namespace bpair;

namespace {

EnumSpec small_spec() {
  EnumSpec spec;
  spec.max_x = 2;
  spec.max_s = 2;
  spec.samples = 200;
  return spec;
}

std::size_t clause(RemarkClause c) { return static_cast<std::size_t>(c); }

}  // namespace

TEST_CASE("registry") {
  const auto all = registered_theorems();
  CHECK(all.size() == 19);
  std::size_t non_theorems = 0;
  for (const auto& t : all) non_theorems += t.non_theorem ? 1 : 0;
  CHECK(non_theorems == 1);
  CHECK(std::any_of(all.begin(), all.end(),
                    [](const TheoremInfo& t) { return t.id == "THM_CONTINUITY"; }));
  CHECK_THROWS_AS((void)check_theorem("NO_SUCH_THEOREM", small_spec()), UnknownTheorem);
}

TEST_CASE("subset theorems hold at small bounds") {
  for (const char* id : {"THM_PROP1", "THM_OPEN", "THM_CLOSED", "LEM_EXTREST", "THM_DE", "LEM_B2",
                         "THM_B2_EQUIV", "PROP_ARROW", "THM_ARROW_OPEN", "THM_ARROW_CLOSED",
                         "THM_ARROW_FIXPOINT", "THM_ARROW_INTERSECTION", "PROP_HAUSDORFF",
                         "LEM_RHOSIGMA_SUB", "LEM_CONT_SUB", "THM_CONTINUITY",
                         "PROP_SIGMA_RHO_WELLDEF"}) {
    CAPTURE(id);
    const CheckReport r = check_theorem(id, small_spec());
    CHECK(r.counterexamples.empty());
    CHECK(r.instances > 0);
    CHECK(r.passed());
  }
}

TEST_CASE("the converse non-theorem finds the counterexample pair") {
  EnumSpec spec;
  const CheckReport r = check_theorem("NONTHM_CONVERSE_DE", spec);
  CHECK(r.expects_counterexamples);
  CHECK_FALSE(r.counterexamples.empty());
  CHECK(r.requirement_met);
  CHECK(r.passed());
  const bool has_required_witness =
      std::any_of(r.counterexamples.begin(), r.counterexamples.end(), [](const Witness& w) {
        return w.detail.rfind("X=2 S=3 rel=101/011 D={0} ", 0) == 0;
      });
  CHECK(has_required_witness);
  // Below |S| = 3 the specific witness cannot appear.
  EnumSpec tiny;
  tiny.max_x = 2;
  tiny.max_s = 2;
  CHECK_FALSE(check_theorem("NONTHM_CONVERSE_DE", tiny).requirement_met);
}

TEST_CASE("serial and parallel sweeps agree") {
  const EnumSpec spec = small_spec();
  for (const auto& t : registered_theorems()) {
    CAPTURE(t.id);
    const CheckReport s = check_theorem(t.id, spec, Execution::serial);
    const CheckReport p = check_theorem(t.id, spec, Execution::parallel);
    CHECK(s.same_outcome(p));
    CHECK(std::is_sorted(p.counterexamples.begin(), p.counterexamples.end()));
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  EnumSpec spec = small_spec();
  spec.seed = 7;
  const CheckReport a = check_theorem("THM_CONTINUITY", spec);
  const CheckReport b = check_theorem("THM_CONTINUITY", spec);
  CHECK(a.same_outcome(b));
  spec.samples = 0;
  const CheckReport c = check_theorem("THM_CONTINUITY", spec);
  CHECK(c.instances < a.instances);
}

TEST_CASE("the remark on the Sierpinski space") {
  const CheckReport r = verify_remark(sierpinski_topology());
  CHECK(r.instances > 0);
  const auto by_clause = remark_violations_by_clause(r);
  REQUIRE(by_clause.size() == kRemarkClauseCount);
  // (□D)← is always empty because the empty open lies in □D, so this clause
  // holds only for D = ∅; it disagrees with its predicate at D = ∅ and D = Ω.
  CHECK(by_clause[clause(RemarkClause::BoxArrowLeftIsWhole)] == 2);
  for (std::size_t i = 0; i < kRemarkClauseCount; ++i) {
    if (i == clause(RemarkClause::BoxArrowLeftIsWhole)) continue;
    CAPTURE(remark_clause_name(static_cast<RemarkClause>(i)));
    CHECK(by_clause[i] == 0);
  }
  // D = {1}: rest(D→) = D and {1} is a closed indistinguishability class.
  const BasicPair bp = from_topology(sierpinski_topology());
  const Subset one = Subset::of(2, {1});
  CHECK(rest(bp, arrow_right(bp, one)) == one);
  const Subset all = Subset::full(2);
  CHECK(ext(bp, arrow_right(bp, all)) == all);
}

TEST_CASE("the remark on all small topologies") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const FiniteTopology& t : enumerate_topologies(n)) {
      const auto by_clause = remark_violations_by_clause(verify_remark(t));
      for (std::size_t i = 0; i < kRemarkClauseCount; ++i) {
        const std::size_t expected = i == clause(RemarkClause::BoxArrowLeftIsWhole) ? 2 : 0;
        REQUIRE(by_clause[i] == expected);
      }
    }
  }
  FiniteTopology bad{FiniteCarrier{2, "Ω"}, {Subset(2)}};
  CHECK_THROWS_AS((void)verify_remark(bad), std::invalid_argument);
}

TEST_CASE("descriptions") {
  CHECK(describe(paper_counterexample()) == "X=2 S=3 rel=101/011");
  CHECK(describe(Rel::identity(2)) == "10/01");
  CHECK(describe(sierpinski_topology()) == "Ω=2 opens={},{0},{0,1}");
}

TEST_CASE("report formats") {
  const CheckReport r = verify_remark(sierpinski_topology());
  const std::string text = format_report_text(r, 1);
  CHECK(text.rfind("REMARK: FAIL", 0) == 0);
  CHECK(text.find("[R4b]") != std::string::npos);
  const auto j = nlohmann::json::parse(format_report_structured(r, 10));
  CHECK(j["id"] == "REMARK");
  CHECK(j["passed"] == false);
  CHECK(j["counterexample_count"] == 2);
  CHECK(j["counterexamples"].size() == 2);
  CHECK(format_report_structured(r).find('\n') == std::string::npos);
}
