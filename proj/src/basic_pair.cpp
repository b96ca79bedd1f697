#include "bpair/basic_pair.hpp"

#include <string>
#include <utility>

#include "bpair/errors.hpp"

namespace bpair {

namespace {

void require_points(const BasicPair& bp, const Subset& d, const char* op) {
  if (d.size() != bp.points()) {
    throw DimensionError(std::string(op) + ": subset of size " + std::to_string(d.size()) +
                         " is not over X of size " + std::to_string(bp.points()));
  }
}

void require_indexes(const BasicPair& bp, const Subset& u, const char* op) {
  if (u.size() != bp.indexes()) {
    throw DimensionError(std::string(op) + ": subset of size " + std::to_string(u.size()) +
                         " is not over S of size " + std::to_string(bp.indexes()));
  }
}

}  // namespace

BasicPair::BasicPair(Rel forces)
    : BasicPair(FiniteCarrier{forces.source_size(), "X"},
                FiniteCarrier{forces.target_size(), "S"}, std::move(forces)) {}

BasicPair::BasicPair(FiniteCarrier concrete, FiniteCarrier formal, Rel forces)
    : concrete_(std::move(concrete)), formal_(std::move(formal)), forces_(std::move(forces)) {
  if (forces_.source_size() != concrete_.size || forces_.target_size() != formal_.size) {
    throw DimensionError("BasicPair: forcing relation is " +
                         std::to_string(forces_.source_size()) + "x" +
                         std::to_string(forces_.target_size()) + ", carriers are " +
                         std::to_string(concrete_.size) + " and " +
                         std::to_string(formal_.size));
  }
}

BasicPair BasicPair::identity(std::size_t n) { return BasicPair(Rel::identity(n)); }

const Subset& ext_index(const BasicPair& bp, std::size_t a) { return bp.forces().col(a); }

const Subset& diamond_point(const BasicPair& bp, std::size_t x) { return bp.forces().row(x); }

Subset diamond(const BasicPair& bp, const Subset& d) {
  require_points(bp, d, "diamond");
  return existential_image(bp.forces(), d);
}

Subset box(const BasicPair& bp, const Subset& d) {
  require_points(bp, d, "box");
  return universal_coimage(bp.forces(), d);
}

Subset ext(const BasicPair& bp, const Subset& u) {
  require_indexes(bp, u, "ext");
  return existential_preimage(bp.forces(), u);
}

Subset rest(const BasicPair& bp, const Subset& u) {
  require_indexes(bp, u, "rest");
  return universal_preimage(bp.forces(), u);
}

Subset arrow_right(const BasicPair& bp, const Subset& d) {
  require_points(bp, d, "arrow_right");
  Subset out = Subset::full(bp.indexes());
  d.for_each([&](std::size_t x) { out &= diamond_point(bp, x); });
  return out;
}

Subset arrow_left(const BasicPair& bp, const Subset& u) {
  require_indexes(bp, u, "arrow_left");
  Subset out = Subset::full(bp.points());
  u.for_each([&](std::size_t a) { out &= ext_index(bp, a); });
  return out;
}

bool is_open(const BasicPair& bp, const Subset& d) {
  require_points(bp, d, "is_open");
  return d.subset_of(ext(bp, box(bp, d)));
}

bool is_closed(const BasicPair& bp, const Subset& d) {
  require_points(bp, d, "is_closed");
  return rest(bp, diamond(bp, d)).subset_of(d);
}

bool is_clopen(const BasicPair& bp, const Subset& d) {
  return is_open(bp, d) && is_closed(bp, d);
}

bool satisfies_b1(const BasicPair& bp) {
  const std::size_t m = bp.indexes();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const Subset meet = ext_index(bp, a) & ext_index(bp, b);
      Subset covered(bp.points());
      for (std::size_t c = 0; c < m; ++c) {
        if (ext_index(bp, c).subset_of(meet)) covered |= ext_index(bp, c);
      }
      if (covered != meet) return false;
    }
  }
  return true;
}

bool satisfies_b2(const BasicPair& bp) {
  for (std::size_t x = 0; x < bp.points(); ++x) {
    if (diamond_point(bp, x).empty()) return false;
  }
  return true;
}

// x, x' are "inseparable" when every neighbourhood of x meets every
// neighbourhood of x'; Hausdorff forbids distinct inseparable points.
bool is_hausdorff(const BasicPair& bp) {
  const std::size_t n = bp.points();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t x2 = x + 1; x2 < n; ++x2) {
      bool inseparable = true;
      diamond_point(bp, x).for_each([&](std::size_t a) {
        if (!inseparable) return;
        diamond_point(bp, x2).for_each([&](std::size_t a2) {
          if (inseparable && !overlaps(ext_index(bp, a), ext_index(bp, a2))) {
            inseparable = false;
          }
        });
      });
      if (inseparable) return false;
    }
  }
  return true;
}

}  // namespace bpair
