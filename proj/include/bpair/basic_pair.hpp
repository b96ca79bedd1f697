#pragma once

#include <cstddef>

#include "bpair/rel.hpp"
#include "bpair/subset.hpp"

namespace bpair {

/// (X, ⊩, S): points X, neighbourhood indexes S, and the forcing relation.
class BasicPair {
 public:
  BasicPair() : BasicPair(Rel{}) {}
  explicit BasicPair(Rel forces);
  BasicPair(FiniteCarrier concrete, FiniteCarrier formal, Rel forces);

  /// (n, =, n)
  static BasicPair identity(std::size_t n);

  const FiniteCarrier& concrete() const noexcept { return concrete_; }
  const FiniteCarrier& formal() const noexcept { return formal_; }
  const Rel& forces() const noexcept { return forces_; }

  std::size_t points() const noexcept { return concrete_.size; }
  std::size_t indexes() const noexcept { return formal_.size; }

  friend bool operator==(const BasicPair& a, const BasicPair& b) {
    return a.forces_ == b.forces_;
  }

 private:
  FiniteCarrier concrete_;
  FiniteCarrier formal_;
  Rel forces_;
};

/// ext a = {x | x ⊩ a}
const Subset& ext_index(const BasicPair& bp, std::size_t a);
/// ◇x = {a | x ⊩ a}
const Subset& diamond_point(const BasicPair& bp, std::size_t x);

/// ◇D: indexes whose extension overlaps D.
Subset diamond(const BasicPair& bp, const Subset& d);
/// □D: indexes whose extension is contained in D.
Subset box(const BasicPair& bp, const Subset& d);
/// ext U: points forcing some index of U.
Subset ext(const BasicPair& bp, const Subset& u);
/// rest U: points forcing only indexes of U.
Subset rest(const BasicPair& bp, const Subset& u);

/// D→ = {a | D ⊆ ext a}
Subset arrow_right(const BasicPair& bp, const Subset& d);
/// U← = {x | U ⊆ ◇x}
Subset arrow_left(const BasicPair& bp, const Subset& u);

/// D ⊆ ext □D
bool is_open(const BasicPair& bp, const Subset& d);
/// rest ◇D ⊆ D
bool is_closed(const BasicPair& bp, const Subset& d);
bool is_clopen(const BasicPair& bp, const Subset& d);

/// ext a ∩ ext b is the union of the extensions it contains, for all a, b.
bool satisfies_b1(const BasicPair& bp);
/// Every point forces some index.
bool satisfies_b2(const BasicPair& bp);
/// Points all of whose neighbourhoods pairwise overlap coincide.
bool is_hausdorff(const BasicPair& bp);

}  // namespace bpair
