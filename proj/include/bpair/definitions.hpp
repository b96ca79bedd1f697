#pragma once

// Quantifier-by-quantifier readings of the topological predicates. They read
// only `forces().holds` and never go through the image operators, so the
// model checker can set them against the operator-based implementations.

#include "bpair/basic_pair.hpp"
#include "bpair/rel.hpp"
#include "bpair/rel_communication.hpp"

namespace bpair::definitions {

/// ∀x ε D ∃a (x ⊩ a ∧ ext a ⊆ D)
bool open_by_neighbourhoods(const BasicPair& bp, const Subset& d);
/// ∀x ((∀a (x ⊩ a → ext a ≬ D)) → x ε D)
bool closed_by_neighbourhoods(const BasicPair& bp, const Subset& d);
/// ∀b ∀x (x ε r⁻ext b → ∃a (x ⊩ a ∧ ext a ⊆ r⁻ext b)), with r⁻ext b
/// itself expanded as ∃y (r(x,y) ∧ y ⊩ b).
bool continuous_by_neighbourhoods(const PairedSetting& ps, const Rel& r);
/// ∀b ∀x (x ε r⁻ext b → ◇x ≬ □ r⁻ext b)
bool continuous_by_diamond(const PairedSetting& ps, const Rel& r);

}  // namespace bpair::definitions
