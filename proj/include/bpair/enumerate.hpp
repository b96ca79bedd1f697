#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "bpair/basic_pair.hpp"
#include "bpair/rel_communication.hpp"

namespace bpair {

/// Bounds for exhaustive sweeps.
///
/// Subset theorems sweep every pair with |X| <= max_x, |S| <= max_s.
/// Relation theorems sweep four carriers; see `relation_bounds`.
struct EnumSpec {
  std::size_t max_x = 3;
  std::size_t max_s = 3;
  std::optional<std::size_t> max_y;
  std::optional<std::size_t> max_t;
  /// Size-`sample_size` random settings added to relation sweeps.
  std::size_t samples = 10000;
  std::size_t sample_size = 3;
  std::uint64_t seed = 0x5eedba51c0ffeeULL;

  struct RelationBounds {
    std::size_t x, s, y, t;
  };
  /// With neither max_y nor max_t set, every carrier is capped at 2 (and
  /// at max_x / max_s). Otherwise the bounds are taken literally, a missing
  /// max_y / max_t defaulting to max_x / max_s.
  RelationBounds relation_bounds() const;

  /// Throws std::invalid_argument when a bound makes a matrix wider than 62 bits.
  void validate() const;

  friend bool operator==(const EnumSpec&, const EnumSpec&) = default;
};

/// One slice of the enumeration: all matrices of a fixed shape.
struct ShapeSlice {
  std::size_t rows;
  std::size_t cols;
  std::uint64_t offset;
  std::uint64_t count;
};

/// Every basic pair with |X| <= max_x and |S| <= max_s exactly once, ordered
/// by (|X|, |S|, incidence matrix read as a little-endian integer).
class BasicPairEnumeration {
 public:
  BasicPairEnumeration(std::size_t max_x, std::size_t max_s);
  explicit BasicPairEnumeration(const EnumSpec& spec)
      : BasicPairEnumeration(spec.max_x, spec.max_s) {}

  std::uint64_t size() const noexcept { return total_; }
  BasicPair at(std::uint64_t i) const;
  const std::vector<ShapeSlice>& slices() const noexcept { return slices_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BasicPair;
    using difference_type = std::ptrdiff_t;

    iterator(const BasicPairEnumeration* e, std::uint64_t i) : e_(e), i_(i) {}
    BasicPair operator*() const { return e_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++i_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.i_ == b.i_; }

   private:
    const BasicPairEnumeration* e_;
    std::uint64_t i_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, total_}; }

 private:
  std::vector<ShapeSlice> slices_;
  std::uint64_t total_ = 0;
};

/// Same as BasicPairEnumeration(spec).
BasicPairEnumeration enumerate_basic_pairs(const EnumSpec& spec);

/// Every pair of basic pairs (X,⊩,S), (Y,⊩,T) within the given bounds,
/// ordered by (|X|, |S|, |Y|, |T|, source matrix, target matrix).
class SettingEnumeration {
 public:
  explicit SettingEnumeration(const EnumSpec::RelationBounds& bounds);

  std::uint64_t size() const noexcept { return total_; }
  PairedSetting at(std::uint64_t i) const;

 private:
  struct Slice {
    std::size_t x, s, y, t;
    std::uint64_t offset;
    std::uint64_t count;
  };
  std::vector<Slice> slices_;
  std::uint64_t total_ = 0;
};

/// Uniformly random matrices of the given shape, from a seeded engine.
struct RandomSettingSource {
  std::uint64_t seed;
  std::size_t size;

  /// `count` settings with all four carriers of `size` elements; the same
  /// seed always yields the same sequence.
  std::vector<PairedSetting> settings(std::size_t count) const;
  /// `count` (setting, relation X→Y) instances.
  std::vector<std::pair<PairedSetting, Rel>> instances(std::size_t count) const;
};

}  // namespace bpair
