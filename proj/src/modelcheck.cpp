#include "bpair/modelcheck.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iomanip>
#include <unordered_map>
#include <sstream>

#include <json.hpp>

#include "bpair/communication.hpp"
#include "bpair/definitions.hpp"
#include "sweep.hpp"

namespace bpair {

namespace {

using detail::Tally;
using Clock = std::chrono::steady_clock;

constexpr std::array<TheoremInfo, 19> kTheorems = {{
    {"THM_PROP1", "monotonicity, ext ⊣ □, ◇ ⊣ rest, ext□D ⊆ D ⊆ rest◇D", false},
    {"THM_OPEN", "D open iff (□,ext)-communicable", false},
    {"THM_CLOSED", "D closed iff (◇,rest)-communicable", false},
    {"LEM_EXTREST", "ext U is open and rest U is closed", false},
    {"THM_DE", "(◇,ext) ⇒ open, (□,rest) ⇒ closed, both ⇒ clopen", false},
    {"NONTHM_CONVERSE_DE", "open ⇒ (◇,ext) and closed ⇒ (□,rest) fail", true},
    {"LEM_B2", "under B2, rest U ⊆ ext U", false},
    {"THM_B2_EQUIV", "under B2, (◇,ext) iff (□,rest) iff clopen ∧ ◇D ⊆ □D", false},
    {"PROP_ARROW", "arrows are antitone, D ⊆ U← iff U ⊆ D→, D ⊆ (D→)←", false},
    {"THM_ARROW_OPEN", "(→,ext)-communicable ⇒ open", false},
    {"THM_ARROW_CLOSED", "(→,rest)-communicable ⇒ closed", false},
    {"THM_ARROW_FIXPOINT", "(□,←) or (◇,←) ⇒ (→,←)-communicable", false},
    {"THM_ARROW_INTERSECTION", "(→,←)-communicable iff D = ⋂{ext a | a ε U} for some U", false},
    {"PROP_SIGMA_RHO_WELLDEF", "r1 ~ r2 ⇒ σ(r1) = σ(r2); s1 ≈ s2 ⇒ ρ(s1) = ρ(s2)", false},
    {"LEM_RHOSIGMA_SUB", "ρ(σ(r))⁻ext b ⊆ r⁻ext b", false},
    {"LEM_CONT_SUB", "r continuous ⇒ r⁻ext b ⊆ ρ(σ(r))⁻ext b", false},
    {"THM_CONTINUITY", "r continuous iff (σ,ρ)-communicable", false},
    {"PROP_HAUSDORFF", "f function, target T₂ ⇒ ρ(σ(f)) single-valued restriction of f", false},
    {"REMARK_TOPOLOGY", "fixed points of the decoders in (Ω, ∈, 𝒯) match topological predicates",
     false},
}};

const TheoremInfo& find_theorem(std::string_view id) {
  for (const auto& t : kTheorems) {
    if (t.id == id) return t;
  }
  throw UnknownTheorem("unknown theorem id: " + std::string(id));
}

std::vector<Subset> all_subsets(std::size_t n) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    out.push_back(Subset::from_code(n, c));
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CheckReport start_report(const TheoremInfo& info) {
  CheckReport r;
  r.id = std::string(info.id);
  r.statement = std::string(info.statement);
  r.expects_counterexamples = info.non_theorem;
  return r;
}

void finish(CheckReport& report, Tally&& tally, Clock::time_point t0) {
  report.instances += tally.instances;
  report.counterexamples.insert(report.counterexamples.end(),
                                std::make_move_iterator(tally.witnesses.begin()),
                                std::make_move_iterator(tally.witnesses.end()));
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  report.elapsed = Clock::now() - t0;
}

// ---------------------------------------------------------------------------
// Subset-level checks: one call per enumerated basic pair.

using PairCheck = std::function<void(const BasicPair&, std::uint64_t, Tally&)>;

void check_prop1(const BasicPair& bp, std::uint64_t i, Tally& t) {
  const auto ds = all_subsets(bp.points());
  const auto us = all_subsets(bp.indexes());
  const std::string pair = describe(bp);
  for (const auto& d : ds) {
    const Subset dia = diamond(bp, d);
    const Subset bx = box(bp, d);
    for (const auto& e : ds) {
      ++t.instances;
      if (d.subset_of(e) && !(dia.subset_of(diamond(bp, e)) && bx.subset_of(box(bp, e)))) {
        t.fail(i, "[monotone ◇□] " + pair + " D=" + d.to_string() + " E=" + e.to_string());
      }
    }
    for (const auto& u : us) {
      ++t.instances;
      if (ext(bp, u).subset_of(d) != u.subset_of(bx)) {
        t.fail(i, "[ext ⊣ □] " + pair + " D=" + d.to_string() + " U=" + u.to_string());
      }
      if (d.subset_of(rest(bp, u)) != dia.subset_of(u)) {
        t.fail(i, "[◇ ⊣ rest] " + pair + " D=" + d.to_string() + " U=" + u.to_string());
      }
    }
    ++t.instances;
    if (!ext(bp, bx).subset_of(d) || !d.subset_of(rest(bp, dia))) {
      t.fail(i, "[ext□D ⊆ D ⊆ rest◇D] " + pair + " D=" + d.to_string());
    }
  }
  for (const auto& u : us) {
    const Subset eu = ext(bp, u);
    const Subset ru = rest(bp, u);
    for (const auto& v : us) {
      ++t.instances;
      if (u.subset_of(v) && !(eu.subset_of(ext(bp, v)) && ru.subset_of(rest(bp, v)))) {
        t.fail(i, "[monotone ext rest] " + pair + " U=" + u.to_string() + " V=" + v.to_string());
      }
    }
  }
}

void check_open(const BasicPair& bp, std::uint64_t i, Tally& t) {
  const SubsetSystem system = subset_system(bp, Strategy::BoxExt);
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool by_def = definitions::open_by_neighbourhoods(bp, d);
    const bool by_inclusion = is_open(bp, d);
    const bool communicable = system.is_communicable_a(d);
    bool by_diamond = true;
    const Subset bx = box(bp, d);
    d.for_each([&](std::size_t x) { by_diamond = by_diamond && overlaps(diamond_point(bp, x), bx); });
    if (by_def != communicable || by_inclusion != communicable || by_diamond != communicable) {
      t.fail(i, describe(bp) + " D=" + d.to_string() + " definition=" + yes_no(by_def) +
                    " inclusion=" + yes_no(by_inclusion) + " diamond=" + yes_no(by_diamond) +
                    " BOX_EXT=" + yes_no(communicable));
    }
  }
}

void check_closed(const BasicPair& bp, std::uint64_t i, Tally& t) {
  const SubsetSystem system = subset_system(bp, Strategy::DiamondRest);
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool by_def = definitions::closed_by_neighbourhoods(bp, d);
    const bool by_inclusion = is_closed(bp, d);
    const bool communicable = system.is_communicable_a(d);
    if (by_def != communicable || by_inclusion != communicable) {
      t.fail(i, describe(bp) + " D=" + d.to_string() + " definition=" + yes_no(by_def) +
                    " inclusion=" + yes_no(by_inclusion) +
                    " DIAMOND_REST=" + yes_no(communicable));
    }
  }
}

void check_extrest(const BasicPair& bp, std::uint64_t i, Tally& t) {
  for (const auto& u : all_subsets(bp.indexes())) {
    ++t.instances;
    const Subset eu = ext(bp, u);
    const Subset ru = rest(bp, u);
    const bool ext_ok = eu == ext(bp, box(bp, eu)) && is_open(bp, eu) &&
                        definitions::open_by_neighbourhoods(bp, eu);
    const bool rest_ok = ru == rest(bp, diamond(bp, ru)) && is_closed(bp, ru) &&
                         definitions::closed_by_neighbourhoods(bp, ru);
    if (!ext_ok) t.fail(i, "[ext U open] " + describe(bp) + " U=" + u.to_string());
    if (!rest_ok) t.fail(i, "[rest U closed] " + describe(bp) + " U=" + u.to_string());
  }
}

void check_de(const BasicPair& bp, std::uint64_t i, Tally& t) {
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool de = is_communicable(bp, Strategy::DiamondExt, d);
    const bool br = is_communicable(bp, Strategy::BoxRest, d);
    const bool open = definitions::open_by_neighbourhoods(bp, d);
    const bool closed = definitions::closed_by_neighbourhoods(bp, d);
    if (de && !open) t.fail(i, "[(◇,ext) ⇒ open] " + describe(bp) + " D=" + d.to_string());
    if (br && !closed) t.fail(i, "[(□,rest) ⇒ closed] " + describe(bp) + " D=" + d.to_string());
    if (de && br && !(open && closed)) {
      t.fail(i, "[both ⇒ clopen] " + describe(bp) + " D=" + d.to_string());
    }
  }
}

void check_converse_de(const BasicPair& bp, std::uint64_t i, Tally& t) {
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool fails_open = is_open(bp, d) && !is_communicable(bp, Strategy::DiamondExt, d);
    const bool fails_closed = is_closed(bp, d) && !is_communicable(bp, Strategy::BoxRest, d);
    if (!fails_open && !fails_closed) continue;
    std::string detail = describe(bp) + " D=" + d.to_string();
    if (fails_open) detail += " open∧¬DIAMOND_EXT";
    if (fails_closed) detail += " closed∧¬BOX_REST";
    t.fail(i, std::move(detail));
  }
}

void check_lem_b2(const BasicPair& bp, std::uint64_t i, Tally& t) {
  if (!satisfies_b2(bp)) return;
  for (const auto& u : all_subsets(bp.indexes())) {
    ++t.instances;
    if (!rest(bp, u).subset_of(ext(bp, u))) {
      t.fail(i, describe(bp) + " U=" + u.to_string());
    }
  }
}

void check_b2_equiv(const BasicPair& bp, std::uint64_t i, Tally& t) {
  if (!satisfies_b2(bp)) return;
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool de = is_communicable(bp, Strategy::DiamondExt, d);
    const bool br = is_communicable(bp, Strategy::BoxRest, d);
    const bool third = definitions::open_by_neighbourhoods(bp, d) &&
                       definitions::closed_by_neighbourhoods(bp, d) &&
                       diamond(bp, d).subset_of(box(bp, d));
    if (de != br || br != third) {
      t.fail(i, describe(bp) + " D=" + d.to_string() + " DIAMOND_EXT=" + yes_no(de) +
                    " BOX_REST=" + yes_no(br) + " clopen∧◇⊆□=" + yes_no(third));
    }
  }
}

void check_prop_arrow(const BasicPair& bp, std::uint64_t i, Tally& t) {
  const auto ds = all_subsets(bp.points());
  const auto us = all_subsets(bp.indexes());
  const std::string pair = describe(bp);
  for (const auto& d : ds) {
    const Subset dr = arrow_right(bp, d);
    for (const auto& e : ds) {
      ++t.instances;
      if (d.subset_of(e) && !arrow_right(bp, e).subset_of(dr)) {
        t.fail(i, "[→ antitone] " + pair + " D=" + d.to_string() + " E=" + e.to_string());
      }
    }
    for (const auto& u : us) {
      ++t.instances;
      if (d.subset_of(arrow_left(bp, u)) != u.subset_of(dr)) {
        t.fail(i, "[← ⊣ →] " + pair + " D=" + d.to_string() + " U=" + u.to_string());
      }
    }
    ++t.instances;
    if (!d.subset_of(arrow_left(bp, dr))) {
      t.fail(i, "[D ⊆ (D→)←] " + pair + " D=" + d.to_string());
    }
  }
  for (const auto& u : us) {
    const Subset ul = arrow_left(bp, u);
    for (const auto& v : us) {
      ++t.instances;
      if (u.subset_of(v) && !arrow_left(bp, v).subset_of(ul)) {
        t.fail(i, "[← antitone] " + pair + " U=" + u.to_string() + " V=" + v.to_string());
      }
    }
  }
}

void check_arrow_definitions(const BasicPair& bp, std::uint64_t i, Tally& t) {
  const auto& forces = bp.forces();
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    Subset expected(bp.indexes());
    for (std::size_t a = 0; a < bp.indexes(); ++a) {
      bool all = true;
      for (std::size_t x = 0; x < bp.points(); ++x) all = all && (!d.contains(x) || forces.holds(x, a));
      if (all) expected.insert(a);
    }
    if (arrow_right(bp, d) != expected) t.fail(i, "[D→] " + describe(bp) + " D=" + d.to_string());
  }
  for (const auto& u : all_subsets(bp.indexes())) {
    ++t.instances;
    Subset expected(bp.points());
    for (std::size_t x = 0; x < bp.points(); ++x) {
      bool all = true;
      for (std::size_t a = 0; a < bp.indexes(); ++a) all = all && (!u.contains(a) || forces.holds(x, a));
      if (all) expected.insert(x);
    }
    if (arrow_left(bp, u) != expected) t.fail(i, "[U←] " + describe(bp) + " U=" + u.to_string());
  }
}

PairCheck implication_check(Strategy strategy, bool want_open) {
  return [strategy, want_open](const BasicPair& bp, std::uint64_t i, Tally& t) {
    for (const auto& d : all_subsets(bp.points())) {
      ++t.instances;
      if (!is_communicable(bp, strategy, d)) continue;
      const bool holds = want_open ? definitions::open_by_neighbourhoods(bp, d)
                                   : definitions::closed_by_neighbourhoods(bp, d);
      if (!holds) t.fail(i, describe(bp) + " D=" + d.to_string());
    }
  };
}

void check_arrow_fixpoint(const BasicPair& bp, std::uint64_t i, Tally& t) {
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool premise = is_communicable(bp, Strategy::BoxArrowLeft, d) ||
                         is_communicable(bp, Strategy::DiamondArrowLeft, d);
    if (premise && !is_communicable(bp, Strategy::ArrowArrowLeft, d)) {
      t.fail(i, describe(bp) + " D=" + d.to_string());
    }
  }
}

void check_arrow_intersection(const BasicPair& bp, std::uint64_t i, Tally& t) {
  // Every intersection ⋂{ext a | a ε U}, U ranging over all of 𝒫S.
  std::vector<Subset> meets;
  for (const auto& u : all_subsets(bp.indexes())) {
    Subset m = Subset::full(bp.points());
    u.for_each([&](std::size_t a) { m &= ext_index(bp, a); });
    meets.push_back(std::move(m));
  }
  for (const auto& d : all_subsets(bp.points())) {
    ++t.instances;
    const bool communicable = is_communicable(bp, Strategy::ArrowArrowLeft, d);
    const bool is_meet = std::find(meets.begin(), meets.end(), d) != meets.end();
    Subset via_arrow = Subset::full(bp.points());
    arrow_right(bp, d).for_each([&](std::size_t a) { via_arrow &= ext_index(bp, a); });
    if (communicable != is_meet || via_arrow != arrow_left(bp, arrow_right(bp, d))) {
      t.fail(i, describe(bp) + " D=" + d.to_string() + " ARROW_ARROWLEFT=" +
                    yes_no(communicable) + " intersection=" + yes_no(is_meet));
    }
  }
}

CheckReport run_pair_check(const TheoremInfo& info, const EnumSpec& spec, Execution exec,
                           const PairCheck& body) {
  const auto t0 = Clock::now();
  CheckReport report = start_report(info);
  const BasicPairEnumeration pairs(spec);
  Tally tally = detail::sweep(exec, pairs.size(), [&](std::uint64_t i, Tally& t) {
    body(pairs.at(i), i, t);
  });
  report.notes.push_back("exhaustive: |X|<=" + std::to_string(spec.max_x) +
                         " |S|<=" + std::to_string(spec.max_s) + " (" +
                         std::to_string(pairs.size()) + " basic pairs)");
  finish(report, std::move(tally), t0);
  return report;
}

// ---------------------------------------------------------------------------
// Relation-level checks: one call per (setting, relation X→Y).

using RelCheck = std::function<void(const PairedSetting&, const Rel&, std::uint64_t, Tally&)>;

std::string describe_instance(const PairedSetting& ps, const Rel& r) {
  return describe(ps.source) + " | " + describe(ps.target) + " | r=" + describe(r);
}

void check_continuity(const PairedSetting& ps, const Rel& r, std::uint64_t i, Tally& t) {
  ++t.instances;
  const bool by_open = is_continuous(ps, r);
  const bool by_def = definitions::continuous_by_neighbourhoods(ps, r);
  const bool by_diamond = definitions::continuous_by_diamond(ps, r);
  const bool communicable = is_rel_communicable(ps, r);
  const bool witness_agrees = continuity_witness(ps, r).has_value() == !by_open;
  if (by_open != communicable || by_def != communicable || by_diamond != communicable ||
      !witness_agrees) {
    t.fail(i, describe_instance(ps, r) + " open-preimages=" + yes_no(by_open) +
                  " definition=" + yes_no(by_def) + " diamond=" + yes_no(by_diamond) +
                  " communicable=" + yes_no(communicable));
  }
}

void check_rhosigma_sub(const PairedSetting& ps, const Rel& r, std::uint64_t i, Tally& t) {
  const Rel round = rho(ps, sigma(ps, r));
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    ++t.instances;
    const Subset& eb = ext_index(ps.target, b);
    if (!existential_preimage(round, eb).subset_of(existential_preimage(r, eb))) {
      t.fail(i, describe_instance(ps, r) + " b=" + std::to_string(b));
    }
  }
}

void check_cont_sub(const PairedSetting& ps, const Rel& r, std::uint64_t i, Tally& t) {
  if (!is_continuous(ps, r)) return;
  const Rel round = rho(ps, sigma(ps, r));
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    ++t.instances;
    const Subset& eb = ext_index(ps.target, b);
    if (!existential_preimage(r, eb).subset_of(existential_preimage(round, eb))) {
      t.fail(i, describe_instance(ps, r) + " b=" + std::to_string(b));
    }
  }
}

void check_hausdorff(const PairedSetting& ps, const Rel& f, std::uint64_t i, Tally& t) {
  if (!is_function(f) || !is_hausdorff(ps.target)) return;
  ++t.instances;
  const Rel round = rho(ps, sigma(ps, f));
  if (!is_single_valued(round) || !restriction_of(round, f)) {
    t.fail(i, describe_instance(ps, f) + " ρσ(f)=" + describe(round));
  }
}

std::string bounds_note(const EnumSpec::RelationBounds& b, std::uint64_t settings) {
  return "exhaustive: |X|<=" + std::to_string(b.x) + " |S|<=" + std::to_string(b.s) +
         " |Y|<=" + std::to_string(b.y) + " |T|<=" + std::to_string(b.t) + " (" +
         std::to_string(settings) + " settings, every relation X→Y)";
}

std::string sample_note(const EnumSpec& spec, const char* what) {
  std::ostringstream os;
  os << "sampled: " << spec.samples << ' ' << what << " with every carrier of size "
     << spec.sample_size << ", seed=0x" << std::hex << spec.seed;
  return os.str();
}

CheckReport run_relation_check(const TheoremInfo& info, const EnumSpec& spec, Execution exec,
                               const RelCheck& body) {
  const auto t0 = Clock::now();
  CheckReport report = start_report(info);
  const auto bounds = spec.relation_bounds();
  const SettingEnumeration settings(bounds);
  Tally tally = detail::sweep(exec, settings.size(), [&](std::uint64_t i, Tally& t) {
    const PairedSetting ps = settings.at(i);
    const std::size_t n = ps.source.points();
    const std::size_t m = ps.target.points();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * m)); ++code) {
      body(ps, Rel::from_code(n, m, code), i, t);
    }
  });
  report.notes.push_back(bounds_note(bounds, settings.size()));
  if (spec.samples > 0) {
    const auto sample = RandomSettingSource{spec.seed, spec.sample_size}.instances(spec.samples);
    Tally sampled = detail::sweep(exec, sample.size(), [&](std::uint64_t i, Tally& t) {
      body(sample[i].first, sample[i].second, settings.size() + i, t);
    });
    tally.merge(std::move(sampled));
    report.notes.push_back(sample_note(spec, "(setting, relation) instances"));
  }
  finish(report, std::move(tally), t0);
  return report;
}

void check_welldef(const PairedSetting& ps, std::uint64_t i, Tally& t) {
  const std::size_t nx = ps.source.points(), ny = ps.target.points();
  const std::size_t ns = ps.source.indexes(), nt = ps.target.indexes();

  // r1 ~ r2 iff their b-indexed preimage families coincide; σ must agree on each
  // class. Families are keyed by their concatenated membership codes.
  struct ClassEntry {
    std::uint64_t representative;
    std::uint64_t image;
  };
  std::unordered_map<std::uint64_t, ClassEntry> concrete_classes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (nx * ny)); ++code) {
    ++t.instances;
    const Rel r = Rel::from_code(nx, ny, code);
    std::uint64_t key = 0;
    for (std::size_t b = 0; b < nt; ++b) key |= preimage_of_index(ps, r, b).code() << (b * nx);
    const std::uint64_t image = sigma(ps, r).code();
    auto [it, inserted] = concrete_classes.try_emplace(key, ClassEntry{code, image});
    if (inserted) continue;
    const Rel representative = Rel::from_code(nx, ny, it->second.representative);
    if (!rel_equiv_concrete(ps, representative, r)) {
      t.fail(i, "[~] " + describe_instance(ps, r) + " vs r=" + describe(representative));
    }
    if (it->second.image != image) {
      t.fail(i, "[σ] " + describe_instance(ps, r) + " vs r=" + describe(representative));
    }
  }
  std::unordered_map<std::uint64_t, ClassEntry> formal_classes;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (ns * nt)); ++code) {
    ++t.instances;
    const Rel s = Rel::from_code(ns, nt, code);
    std::uint64_t key = 0;
    for (std::size_t x = 0; x < nx; ++x) {
      key |= existential_image(s, diamond_point(ps.source, x)).code() << (x * nt);
    }
    const std::uint64_t image = rho(ps, s).code();
    auto [it, inserted] = formal_classes.try_emplace(key, ClassEntry{code, image});
    if (inserted) continue;
    const Rel representative = Rel::from_code(ns, nt, it->second.representative);
    auto where = [&] {
      return describe(ps.source) + " | " + describe(ps.target) + " | s=" + describe(s) +
             " vs s=" + describe(representative);
    };
    if (!rel_equiv_formal(ps, representative, s)) t.fail(i, "[≈] " + where());
    if (it->second.image != image) t.fail(i, "[ρ] " + where());
  }
}

CheckReport run_welldef(const TheoremInfo& info, const EnumSpec& spec, Execution exec) {
  const auto t0 = Clock::now();
  CheckReport report = start_report(info);
  const auto bounds = spec.relation_bounds();
  const SettingEnumeration settings(bounds);
  Tally tally = detail::sweep(exec, settings.size(), [&](std::uint64_t i, Tally& t) {
    check_welldef(settings.at(i), i, t);
  });
  report.notes.push_back("exhaustive: |X|<=" + std::to_string(bounds.x) +
                         " |S|<=" + std::to_string(bounds.s) + " |Y|<=" +
                         std::to_string(bounds.y) + " |T|<=" + std::to_string(bounds.t) +
                         " (" + std::to_string(settings.size()) +
                         " settings, every r X→Y and s S→T)");
  if (spec.samples > 0) {
    const auto sample = RandomSettingSource{spec.seed, spec.sample_size}.settings(spec.samples);
    Tally sampled = detail::sweep(exec, sample.size(), [&](std::uint64_t i, Tally& t) {
      check_welldef(sample[i], settings.size() + i, t);
    });
    tally.merge(std::move(sampled));
    report.notes.push_back(sample_note(spec, "settings (every r and s in each)"));
  }
  finish(report, std::move(tally), t0);
  return report;
}

// ---------------------------------------------------------------------------
// Classical topology bridge.

constexpr std::array<std::string_view, kRemarkClauseCount> kClauseNames = {
    "R1 D=ext□D iff D open",
    "R2 D=rest◇D iff D closed",
    "R3a D=ext◇D iff D∈{∅,Ω}",
    "R3b D=rest□D iff D∈{∅,Ω}",
    "R4a D=ext(D→) iff D=Ω",
    "R4b D=(□D)← iff D=Ω",
    "R5 D=(D→)← iff D intersection of opens",
    "R6 D=rest(D→) iff D closed T0-point",
    "R7 D=(◇D)← iff D T0-point and intersection of opens",
};

void check_remark_topology(const FiniteTopology& t, std::uint64_t i, Tally& tally) {
  const BasicPair bp = from_topology(t);
  const std::size_t n = t.ground.size;
  const Subset empty(n);
  const Subset whole = Subset::full(n);
  const auto points = t0_points(t);
  const auto meets = intersections_of_opens(t);
  auto is_point = [&](const Subset& d) {
    return std::find(points.begin(), points.end(), d) != points.end();
  };
  auto is_meet = [&](const Subset& d) { return std::binary_search(meets.begin(), meets.end(), d); };

  for (const auto& d : all_subsets(n)) {
    const Subset bx = box(bp, d);
    const Subset dia = diamond(bp, d);
    const Subset right = arrow_right(bp, d);
    const std::array<std::pair<bool, bool>, kRemarkClauseCount> clauses = {{
        {d == ext(bp, bx), t.is_open(d)},
        {d == rest(bp, dia), t.is_closed(d)},
        {d == ext(bp, dia), d == empty || d == whole},
        {d == rest(bp, bx), d == empty || d == whole},
        {d == ext(bp, right), d == whole},
        {d == arrow_left(bp, bx), d == whole},
        {d == arrow_left(bp, right), is_meet(d)},
        {d == rest(bp, right), is_point(d) && t.is_closed(d)},
        {d == arrow_left(bp, dia), is_point(d) && is_meet(d)},
    }};
    for (std::size_t c = 0; c < clauses.size(); ++c) {
      ++tally.instances;
      const auto [fixed, predicate] = clauses[c];
      if (fixed != predicate) {
        tally.fail(i, "[" + std::string(kClauseNames[c]).substr(0, kClauseNames[c].find(' ')) +
                          "] " + describe(t) + " D=" + d.to_string() +
                          " fixed-point=" + yes_no(fixed) + " predicate=" + yes_no(predicate));
      }
    }
  }
}

CheckReport run_remark_suite(const TheoremInfo& info, const EnumSpec& spec, Execution exec) {
  const auto t0 = Clock::now();
  CheckReport report = start_report(info);
  const std::size_t max_n = std::min<std::size_t>(spec.max_x, 4);
  std::vector<FiniteTopology> all;
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto ts = enumerate_topologies(n);
    report.notes.push_back(std::to_string(ts.size()) + " topologies on " + std::to_string(n) +
                           " points");
    all.insert(all.end(), std::make_move_iterator(ts.begin()), std::make_move_iterator(ts.end()));
  }
  Tally tally = detail::sweep(exec, all.size(), [&](std::uint64_t i, Tally& t) {
    check_remark_topology(all[i], i, t);
  });
  finish(report, std::move(tally), t0);
  return report;
}

}  // namespace

bool CheckReport::passed() const {
  if (expects_counterexamples) return !counterexamples.empty() && requirement_met;
  return counterexamples.empty() && requirement_met;
}

bool CheckReport::same_outcome(const CheckReport& o) const {
  return id == o.id && statement == o.statement &&
         expects_counterexamples == o.expects_counterexamples && instances == o.instances &&
         counterexamples == o.counterexamples && requirement == o.requirement &&
         requirement_met == o.requirement_met && notes == o.notes;
}

std::span<const TheoremInfo> registered_theorems() { return kTheorems; }

BasicPair paper_counterexample() {
  Rel forces(2, 3);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      if (x == y || y == 2) forces.set(x, y);
    }
  }
  return BasicPair(std::move(forces));
}

CheckReport check_theorem(std::string_view id, const EnumSpec& spec, Execution exec) {
  const TheoremInfo& info = find_theorem(id);
  spec.validate();
  const std::string name(id);

  if (name == "THM_PROP1") return run_pair_check(info, spec, exec, check_prop1);
  if (name == "THM_OPEN") return run_pair_check(info, spec, exec, check_open);
  if (name == "THM_CLOSED") return run_pair_check(info, spec, exec, check_closed);
  if (name == "LEM_EXTREST") return run_pair_check(info, spec, exec, check_extrest);
  if (name == "THM_DE") return run_pair_check(info, spec, exec, check_de);
  if (name == "NONTHM_CONVERSE_DE") {
    CheckReport r = run_pair_check(info, spec, exec, check_converse_de);
    const std::string prefix = describe(paper_counterexample()) + " D={0} ";
    r.requirement = "witness " + prefix + "present";
    r.requirement_met = std::any_of(r.counterexamples.begin(), r.counterexamples.end(),
                                    [&](const Witness& w) { return w.detail.starts_with(prefix); });
    return r;
  }
  if (name == "LEM_B2") return run_pair_check(info, spec, exec, check_lem_b2);
  if (name == "THM_B2_EQUIV") return run_pair_check(info, spec, exec, check_b2_equiv);
  if (name == "PROP_ARROW") {
    return run_pair_check(info, spec, exec, [](const BasicPair& bp, std::uint64_t i, Tally& t) {
      check_prop_arrow(bp, i, t);
      check_arrow_definitions(bp, i, t);
    });
  }
  if (name == "THM_ARROW_OPEN") {
    return run_pair_check(info, spec, exec, implication_check(Strategy::ArrowExt, true));
  }
  if (name == "THM_ARROW_CLOSED") {
    return run_pair_check(info, spec, exec, implication_check(Strategy::ArrowRest, false));
  }
  if (name == "THM_ARROW_FIXPOINT") return run_pair_check(info, spec, exec, check_arrow_fixpoint);
  if (name == "THM_ARROW_INTERSECTION") {
    return run_pair_check(info, spec, exec, check_arrow_intersection);
  }
  if (name == "PROP_SIGMA_RHO_WELLDEF") return run_welldef(info, spec, exec);
  if (name == "LEM_RHOSIGMA_SUB") return run_relation_check(info, spec, exec, check_rhosigma_sub);
  if (name == "LEM_CONT_SUB") return run_relation_check(info, spec, exec, check_cont_sub);
  if (name == "THM_CONTINUITY") return run_relation_check(info, spec, exec, check_continuity);
  if (name == "PROP_HAUSDORFF") return run_relation_check(info, spec, exec, check_hausdorff);
  if (name == "REMARK_TOPOLOGY") return run_remark_suite(info, spec, exec);
  throw UnknownTheorem("theorem registered without a checker: " + name);
}

std::vector<CheckReport> run_suite(const EnumSpec& spec, Execution exec) {
  std::vector<CheckReport> out;
  for (const auto& t : kTheorems) out.push_back(check_theorem(t.id, spec, exec));
  return out;
}

std::string_view remark_clause_name(RemarkClause c) {
  return kClauseNames[static_cast<std::size_t>(c)];
}

CheckReport verify_remark(const FiniteTopology& t) {
  t.validate();
  const auto t0 = Clock::now();
  CheckReport report;
  report.id = "REMARK";
  report.statement = std::string(find_theorem("REMARK_TOPOLOGY").statement);
  Tally tally;
  check_remark_topology(t, 0, tally);
  std::sort(tally.witnesses.begin(), tally.witnesses.end());
  report.notes.push_back(describe(t));
  finish(report, std::move(tally), t0);
  return report;
}

std::vector<std::size_t> remark_violations_by_clause(const CheckReport& report) {
  std::vector<std::size_t> counts(kRemarkClauseCount, 0);
  for (const auto& w : report.counterexamples) {
    for (std::size_t c = 0; c < kRemarkClauseCount; ++c) {
      const auto tag = kClauseNames[c].substr(0, kClauseNames[c].find(' '));
      if (w.detail.starts_with("[" + std::string(tag) + "]")) ++counts[c];
    }
  }
  return counts;
}

std::string describe(const Rel& r) {
  std::string out;
  for (std::size_t x = 0; x < r.source_size(); ++x) {
    if (x > 0) out += '/';
    for (std::size_t y = 0; y < r.target_size(); ++y) out += r.holds(x, y) ? '1' : '0';
  }
  return out;
}

std::string describe(const BasicPair& bp) {
  return "X=" + std::to_string(bp.points()) + " S=" + std::to_string(bp.indexes()) +
         " rel=" + describe(bp.forces());
}

std::string describe(const FiniteTopology& t) {
  std::string out = "Ω=" + std::to_string(t.ground.size) + " opens=";
  for (std::size_t i = 0; i < t.opens.size(); ++i) {
    if (i > 0) out += ',';
    out += t.opens[i].to_string();
  }
  return out;
}

std::string format_report_text(const CheckReport& r, std::size_t max_listed) {
  std::ostringstream os;
  os << r.id << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
     << (r.expects_counterexamples ? "non-theorem" : "theorem") << ", instances=" << r.instances
     << ", counterexamples=" << r.counterexamples.size() << ", elapsed=" << std::fixed
     << std::setprecision(3) << r.elapsed.count() << "s)\n";
  os << "  statement: " << r.statement << '\n';
  for (const auto& n : r.notes) os << "  note: " << n << '\n';
  if (!r.requirement.empty()) {
    os << "  requirement: " << r.requirement << " -> " << (r.requirement_met ? "met" : "NOT met")
       << '\n';
  }
  const std::size_t shown = std::min(max_listed, r.counterexamples.size());
  for (std::size_t i = 0; i < shown; ++i) {
    os << "  counterexample (instance " << r.counterexamples[i].instance << "): "
       << r.counterexamples[i].detail << '\n';
  }
  if (shown < r.counterexamples.size()) {
    os << "  ... " << (r.counterexamples.size() - shown) << " more\n";
  }
  return os.str();
}

std::string format_report_structured(const CheckReport& r, std::size_t max_listed) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["kind"] = r.expects_counterexamples ? "non-theorem" : "theorem";
  j["passed"] = r.passed();
  j["statement"] = r.statement;
  j["instances"] = r.instances;
  j["counterexample_count"] = r.counterexamples.size();
  auto list = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < std::min(max_listed, r.counterexamples.size()); ++i) {
    list.push_back({{"instance", r.counterexamples[i].instance},
                    {"detail", r.counterexamples[i].detail}});
  }
  j["counterexamples"] = std::move(list);
  if (!r.requirement.empty()) {
    j["requirement"] = r.requirement;
    j["requirement_met"] = r.requirement_met;
  }
  j["notes"] = r.notes;
  j["elapsed_seconds"] = r.elapsed.count();
  return j.dump();
}

}  // namespace bpair
