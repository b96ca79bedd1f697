#pragma once

#include <cstddef>
#include <optional>

#include "bpair/basic_pair.hpp"
#include "bpair/communication.hpp"
#include "bpair/rel.hpp"

namespace bpair {

/// Source pair (X, ⊩, S) and target pair (Y, ⊩, T) for relations X→Y.
struct PairedSetting {
  BasicPair source;
  BasicPair target;
};

bool is_single_valued(const Rel& r);
bool is_total(const Rel& r);
bool is_function(const Rel& r);
/// r1 ⊆ r2 as sets of pairs.
bool restriction_of(const Rel& r1, const Rel& r2);

/// r⁻ ext b, the preimage of a basic neighbourhood of the target.
Subset preimage_of_index(const PairedSetting& ps, const Rel& r, std::size_t b);

/// Every preimage r⁻ ext b is open in the source pair.
bool is_continuous(const PairedSetting& ps, const Rel& r);

struct ContinuityWitness {
  std::size_t index;  // b ∈ T
  std::size_t point;  // x ∈ X
};

/// First (b, x), b-major, with x ∈ r⁻ ext b but no neighbourhood of x inside
/// r⁻ ext b. Empty iff r is continuous.
std::optional<ContinuityWitness> continuity_witness(const PairedSetting& ps, const Rel& r);

/// r1 ~ r2: equal preimages of every ext b.
bool rel_equiv_concrete(const PairedSetting& ps, const Rel& r1, const Rel& r2);
/// s1 ≈ s2: equal images of every ◇x.
bool rel_equiv_formal(const PairedSetting& ps, const Rel& s1, const Rel& s2);

/// σ(r)(a, b) iff ext a ⊆ r⁻ ext b; a relation S→T.
Rel sigma(const PairedSetting& ps, const Rel& r);
/// ρ(s)(x, y) iff ◇y ⊆ s ◇x; a relation X→Y.
Rel rho(const PairedSetting& ps, const Rel& s);

using RelationSystem = CommunicationSystem<Rel, Rel>;

/// ((Rel(X,Y), ~), (Rel(S,T), ≈), σ, ρ).
RelationSystem relation_system(const PairedSetting& ps);

/// r ~ ρ(σ(r)).
bool is_rel_communicable(const PairedSetting& ps, const Rel& r);

}  // namespace bpair
