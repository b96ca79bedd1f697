#pragma once

#include <chrono>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bpair/basic_pair.hpp"
#include "bpair/enumerate.hpp"
#include "bpair/rel_communication.hpp"
#include "bpair/topology.hpp"

namespace bpair {

/// How a sweep is run. `serial` is the reference loop; `parallel` fans the
/// same per-instance check out over OpenMP threads. Both yield identical
/// reports apart from elapsed time.
enum class Execution { serial, parallel };

struct Witness {
  std::uint64_t instance = 0;
  std::string detail;

  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string id;
  std::string statement;
  /// Registered non-theorem: passes when counterexamples exist.
  bool expects_counterexamples = false;
  std::uint64_t instances = 0;
  /// Sorted canonically (instance, detail).
  std::vector<Witness> counterexamples;
  /// Extra condition a non-theorem must meet, e.g. a specific witness.
  std::string requirement;
  bool requirement_met = true;
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{};

  bool passed() const;
  /// Equal in everything but elapsed time.
  bool same_outcome(const CheckReport& other) const;
};

class UnknownTheorem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct TheoremInfo {
  std::string_view id;
  std::string_view statement;
  bool non_theorem;
};

/// The registered suite, in run order.
std::span<const TheoremInfo> registered_theorems();

CheckReport check_theorem(std::string_view id, const EnumSpec& spec,
                          Execution exec = Execution::parallel);
std::vector<CheckReport> run_suite(const EnumSpec& spec, Execution exec = Execution::parallel);

/// (2, ⊩, 3) with x ⊩ y iff x = y or y = 2.
BasicPair paper_counterexample();

/// The separate clauses of the classical-topology bridge. Chained
/// equivalences are split so each clause pairs one fixed-point condition
/// with one topological predicate.
enum class RemarkClause {
  ExtBoxIsOpen,             // D = ext □D      iff D ∈ 𝒯
  RestDiamondIsClosed,      // D = rest ◇D     iff D closed
  ExtDiamondIsTrivial,      // D = ext ◇D      iff D ∈ {∅, Ω}
  RestBoxIsTrivial,         // D = rest □D     iff D ∈ {∅, Ω}
  ExtArrowIsWhole,          // D = ext(D→)     iff D = Ω
  BoxArrowLeftIsWhole,      // D = (□D)←       iff D = Ω
  ArrowArrowIsIntersection, // D = (D→)←       iff D is an intersection of opens
  RestArrowIsClosedPoint,   // D = rest(D→)    iff D is a closed T₀-point
  DiamondArrowIsOpenPoint,  // D = (◇D)←       iff D is a T₀-point and an intersection of opens
};

inline constexpr std::size_t kRemarkClauseCount = 9;
std::string_view remark_clause_name(RemarkClause c);

/// Checks every clause for every D ⊆ Ω. Throws std::invalid_argument if `t`
/// is not a topology.
CheckReport verify_remark(const FiniteTopology& t);

/// Violations per clause in a report produced by verify_remark or by the
/// REMARK_TOPOLOGY suite.
std::vector<std::size_t> remark_violations_by_clause(const CheckReport& report);

/// Canonical one-line description, e.g. "X=2 S=3 rel=101/011".
std::string describe(const BasicPair& bp);
std::string describe(const Rel& r);
std::string describe(const FiniteTopology& t);

enum class ReportFormat { text, structured };

/// Human-readable block; at most `max_listed` counterexamples are printed.
std::string format_report_text(const CheckReport& r, std::size_t max_listed = 10);
/// One JSON object on one line.
std::string format_report_structured(const CheckReport& r, std::size_t max_listed = 10);

}  // namespace bpair
