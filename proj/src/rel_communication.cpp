#include "bpair/rel_communication.hpp"

#include <memory>
#include <string>

#include "bpair/errors.hpp"

namespace bpair {

namespace {

void require_concrete(const PairedSetting& ps, const Rel& r, const char* op) {
  if (r.source_size() != ps.source.points() || r.target_size() != ps.target.points()) {
    throw DimensionError(std::string(op) + ": relation is " + std::to_string(r.source_size()) +
                         "x" + std::to_string(r.target_size()) + ", expected X→Y = " +
                         std::to_string(ps.source.points()) + "x" +
                         std::to_string(ps.target.points()));
  }
}

void require_formal(const PairedSetting& ps, const Rel& s, const char* op) {
  if (s.source_size() != ps.source.indexes() || s.target_size() != ps.target.indexes()) {
    throw DimensionError(std::string(op) + ": relation is " + std::to_string(s.source_size()) +
                         "x" + std::to_string(s.target_size()) + ", expected S→T = " +
                         std::to_string(ps.source.indexes()) + "x" +
                         std::to_string(ps.target.indexes()));
  }
}

}  // namespace

bool is_single_valued(const Rel& r) {
  for (std::size_t x = 0; x < r.source_size(); ++x) {
    if (r.row(x).count() > 1) return false;
  }
  return true;
}

bool is_total(const Rel& r) {
  for (std::size_t x = 0; x < r.source_size(); ++x) {
    if (r.row(x).empty()) return false;
  }
  return true;
}

bool is_function(const Rel& r) { return is_single_valued(r) && is_total(r); }

bool restriction_of(const Rel& r1, const Rel& r2) { return r1.subset_of(r2); }

Subset preimage_of_index(const PairedSetting& ps, const Rel& r, std::size_t b) {
  require_concrete(ps, r, "preimage_of_index");
  return existential_preimage(r, ext_index(ps.target, b));
}

bool is_continuous(const PairedSetting& ps, const Rel& r) {
  require_concrete(ps, r, "is_continuous");
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    if (!is_open(ps.source, preimage_of_index(ps, r, b))) return false;
  }
  return true;
}

std::optional<ContinuityWitness> continuity_witness(const PairedSetting& ps, const Rel& r) {
  require_concrete(ps, r, "continuity_witness");
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    const Subset pre = preimage_of_index(ps, r, b);
    const Subset interior = ext(ps.source, box(ps.source, pre));
    const Subset bad = pre - interior;
    if (!bad.empty()) return ContinuityWitness{b, bad.elements().front()};
  }
  return std::nullopt;
}

bool rel_equiv_concrete(const PairedSetting& ps, const Rel& r1, const Rel& r2) {
  require_concrete(ps, r1, "rel_equiv_concrete");
  require_concrete(ps, r2, "rel_equiv_concrete");
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    const Subset& eb = ext_index(ps.target, b);
    if (existential_preimage(r1, eb) != existential_preimage(r2, eb)) return false;
  }
  return true;
}

bool rel_equiv_formal(const PairedSetting& ps, const Rel& s1, const Rel& s2) {
  require_formal(ps, s1, "rel_equiv_formal");
  require_formal(ps, s2, "rel_equiv_formal");
  for (std::size_t x = 0; x < ps.source.points(); ++x) {
    const Subset& dx = diamond_point(ps.source, x);
    if (existential_image(s1, dx) != existential_image(s2, dx)) return false;
  }
  return true;
}

Rel sigma(const PairedSetting& ps, const Rel& r) {
  require_concrete(ps, r, "sigma");
  Rel out(ps.source.indexes(), ps.target.indexes());
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    // {a | ext a ⊆ r⁻ ext b} is exactly □(r⁻ ext b) in the source pair.
    box(ps.source, preimage_of_index(ps, r, b)).for_each([&](std::size_t a) { out.set(a, b); });
  }
  return out;
}

Rel rho(const PairedSetting& ps, const Rel& s) {
  require_formal(ps, s, "rho");
  Rel out(ps.source.points(), ps.target.points());
  for (std::size_t x = 0; x < ps.source.points(); ++x) {
    const Subset reach = existential_image(s, diamond_point(ps.source, x));
    // {y | ◇y ⊆ reach} is rest(reach) in the target pair.
    rest(ps.target, reach).for_each([&](std::size_t y) { out.set(x, y); });
  }
  return out;
}

RelationSystem relation_system(const PairedSetting& ps) {
  auto shared = std::make_shared<const PairedSetting>(ps);
  MessageSpace<Rel> concrete{
      [shared](const Rel& r) {
        return r.source_size() == shared->source.points() &&
               r.target_size() == shared->target.points();
      },
      [shared](const Rel& r1, const Rel& r2) { return rel_equiv_concrete(*shared, r1, r2); }};
  MessageSpace<Rel> formal{
      [shared](const Rel& s) {
        return s.source_size() == shared->source.indexes() &&
               s.target_size() == shared->target.indexes();
      },
      [shared](const Rel& s1, const Rel& s2) { return rel_equiv_formal(*shared, s1, s2); }};
  return RelationSystem(
      std::move(concrete), std::move(formal),
      [shared](const Rel& r) { return sigma(*shared, r); },
      [shared](const Rel& s) { return rho(*shared, s); });
}

bool is_rel_communicable(const PairedSetting& ps, const Rel& r) {
  require_concrete(ps, r, "is_rel_communicable");
  return relation_system(ps).is_communicable_a(r);
}

}  // namespace bpair
