#pragma once

#include <cstddef>
#include <vector>

#include "bpair/basic_pair.hpp"
#include "bpair/subset.hpp"

namespace bpair {

/// A topology on a finite ground set Ω, listed by its open sets.
///
/// The order of `opens` matters only as the index order of the formal side
/// produced by `from_topology`.
struct FiniteTopology {
  FiniteCarrier ground;
  std::vector<Subset> opens;

  /// Throws std::invalid_argument unless ∅ and Ω are open, every open lies
  /// in Ω, no open repeats, and the family is closed under ∪ and ∩.
  void validate() const;

  bool is_open(const Subset& d) const;
  /// Complement is open.
  bool is_closed(const Subset& d) const;
};

FiniteTopology discrete_topology(std::size_t n);
FiniteTopology indiscrete_topology(std::size_t n);
/// {∅, {0}, {0,1}} on two points.
FiniteTopology sierpinski_topology();

/// Every topology on an n-point set, each exactly once, opens sorted by
/// membership code. Requires n <= 4.
std::vector<FiniteTopology> enumerate_topologies(std::size_t n);

/// (Ω, ∈, 𝒯): x ⊩ i iff x is in the i-th open.
BasicPair from_topology(const FiniteTopology& t);

/// Classes of topological indistinguishability, ordered by least element.
std::vector<Subset> t0_points(const FiniteTopology& t);

/// All intersections of families of opens; the empty family gives Ω.
std::vector<Subset> intersections_of_opens(const FiniteTopology& t);

}  // namespace bpair
