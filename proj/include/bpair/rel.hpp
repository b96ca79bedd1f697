#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "bpair/subset.hpp"

namespace bpair {

/// Relation between two finite carriers, held as a boolean incidence matrix.
///
/// Rows (r x) and columns (r⁻ y) are both kept so that either direction of
/// image is a sequence of word-wide unions.
class Rel {
 public:
  Rel() = default;
  Rel(std::size_t source_size, std::size_t target_size);

  static Rel identity(std::size_t n);
  static Rel full(std::size_t source_size, std::size_t target_size);
  /// Every row must have size `target_size`.
  static Rel from_rows(std::size_t target_size, const std::vector<Subset>& rows);
  static Rel from_pairs(std::size_t source_size, std::size_t target_size,
                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Bit (x * target_size + y) of `code` is the entry (x, y); needs at most 64 entries.
  static Rel from_code(std::size_t source_size, std::size_t target_size, std::uint64_t code);

  std::size_t source_size() const noexcept { return source_size_; }
  std::size_t target_size() const noexcept { return target_size_; }

  bool holds(std::size_t x, std::size_t y) const;
  void set(std::size_t x, std::size_t y, bool value = true);

  /// r x = {y | r(x, y)}
  const Subset& row(std::size_t x) const;
  /// r⁻ y = {x | r(x, y)}
  const Subset& col(std::size_t y) const;

  std::size_t pair_count() const;
  bool empty() const;
  std::uint64_t code() const;
  Rel converse() const;
  bool subset_of(const Rel& other) const;

  friend bool operator==(const Rel& a, const Rel& b) {
    return a.source_size_ == b.source_size_ && a.target_size_ == b.target_size_ &&
           a.rows_ == b.rows_;
  }

 private:
  std::size_t source_size_ = 0;
  std::size_t target_size_ = 0;
  using Lines = boost::container::small_vector<Subset, 4>;
  Lines rows_;
  Lines cols_;
};

const Subset& row(const Rel& r, std::size_t x);
const Subset& col(const Rel& r, std::size_t y);

/// r D = {y | r⁻ y ≬ D}
Subset existential_image(const Rel& r, const Subset& d);
/// r⁻* D = {y | r⁻ y ⊆ D}
Subset universal_coimage(const Rel& r, const Subset& d);
/// r⁻ E = {x | r x ≬ E}
Subset existential_preimage(const Rel& r, const Subset& e);
/// r* E = {x | r x ⊆ E}
Subset universal_preimage(const Rel& r, const Subset& e);

/// Relational composition: r : A→B then s : B→C, giving A→C.
Rel compose(const Rel& s, const Rel& r);

}  // namespace bpair
