#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace bpair {

/// A named finite index set; its elements are the positions 0..size-1.
struct FiniteCarrier {
  std::size_t size = 0;
  std::string label;
};

/// Extensional subset of a finite carrier, stored as a bit vector.
///
/// Only the carrier size travels with a subset. Two subsets compare equal
/// iff they have the same size and the same members; labels play no role.
/// Bits past `size()` are always zero.
class Subset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Subset() = default;
  explicit Subset(std::size_t size);
  explicit Subset(const FiniteCarrier& carrier) : Subset(carrier.size) {}

  static Subset full(std::size_t size);
  static Subset of(std::size_t size, std::initializer_list<std::size_t> elements);
  static Subset of(std::size_t size, const std::vector<std::size_t>& elements);
  /// Bit i of `code` is membership of element i; requires size <= 64.
  static Subset from_code(std::size_t size, std::uint64_t code);

  std::size_t size() const noexcept { return size_; }
  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  void erase(std::size_t i);

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_full() const noexcept;
  bool subset_of(const Subset& other) const;
  /// Membership code for carriers of at most 64 elements.
  std::uint64_t code() const;

  std::vector<std::size_t> elements() const;
  /// Literal form, e.g. "{0,2}" or "{}".
  std::string to_string() const;

  Subset complement() const;
  Subset& operator&=(const Subset& other);
  Subset& operator|=(const Subset& other);
  Subset& operator-=(const Subset& other);

  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend Subset operator~(const Subset& a) { return a.complement(); }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  /// Canonical order: by size, then by membership words (low word first).
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(w * kWordBits + static_cast<std::size_t>(bit));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check_index(std::size_t i) const;
  void check_same(const Subset& other) const;
  void clear_tail();

  std::size_t size_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

/// True iff the two subsets share an element.
bool overlaps(const Subset& d, const Subset& e);

}  // namespace bpair
