#include "bpair/definitions.hpp"

namespace bpair::definitions {

namespace {

bool ext_within(const BasicPair& bp, std::size_t a, const Subset& d) {
  for (std::size_t x = 0; x < bp.points(); ++x) {
    if (bp.forces().holds(x, a) && !d.contains(x)) return false;
  }
  return true;
}

bool ext_meets(const BasicPair& bp, std::size_t a, const Subset& d) {
  for (std::size_t x = 0; x < bp.points(); ++x) {
    if (bp.forces().holds(x, a) && d.contains(x)) return true;
  }
  return false;
}

// r⁻ext b by brute force.
Subset preimage(const PairedSetting& ps, const Rel& r, std::size_t b) {
  Subset out(ps.source.points());
  for (std::size_t x = 0; x < ps.source.points(); ++x) {
    for (std::size_t y = 0; y < ps.target.points(); ++y) {
      if (r.holds(x, y) && ps.target.forces().holds(y, b)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace

bool open_by_neighbourhoods(const BasicPair& bp, const Subset& d) {
  for (std::size_t x = 0; x < bp.points(); ++x) {
    if (!d.contains(x)) continue;
    bool found = false;
    for (std::size_t a = 0; a < bp.indexes() && !found; ++a) {
      found = bp.forces().holds(x, a) && ext_within(bp, a, d);
    }
    if (!found) return false;
  }
  return true;
}

bool closed_by_neighbourhoods(const BasicPair& bp, const Subset& d) {
  for (std::size_t x = 0; x < bp.points(); ++x) {
    bool all_meet = true;
    for (std::size_t a = 0; a < bp.indexes() && all_meet; ++a) {
      if (bp.forces().holds(x, a)) all_meet = ext_meets(bp, a, d);
    }
    if (all_meet && !d.contains(x)) return false;
  }
  return true;
}

bool continuous_by_neighbourhoods(const PairedSetting& ps, const Rel& r) {
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    const Subset pre = preimage(ps, r, b);
    for (std::size_t x = 0; x < ps.source.points(); ++x) {
      if (!pre.contains(x)) continue;
      bool found = false;
      for (std::size_t a = 0; a < ps.source.indexes() && !found; ++a) {
        found = ps.source.forces().holds(x, a) && ext_within(ps.source, a, pre);
      }
      if (!found) return false;
    }
  }
  return true;
}

bool continuous_by_diamond(const PairedSetting& ps, const Rel& r) {
  for (std::size_t b = 0; b < ps.target.indexes(); ++b) {
    const Subset pre = existential_preimage(r, ext_index(ps.target, b));
    const Subset inner = box(ps.source, pre);
    for (std::size_t x = 0; x < ps.source.points(); ++x) {
      if (pre.contains(x) && !overlaps(diamond_point(ps.source, x), inner)) return false;
    }
  }
  return true;
}

}  // namespace bpair::definitions
