#include "bpair/subset.hpp"

#include <algorithm>
#include <bit>

#include "bpair/errors.hpp"

namespace bpair {

namespace {

std::size_t word_count(std::size_t size) {
  return (size + Subset::kWordBits - 1) / Subset::kWordBits;
}

}  // namespace

Subset::Subset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

Subset Subset::full(std::size_t size) {
  Subset s(size);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.clear_tail();
  return s;
}

Subset Subset::of(std::size_t size, std::initializer_list<std::size_t> elements) {
  Subset s(size);
  for (std::size_t e : elements) s.insert(e);
  return s;
}

Subset Subset::of(std::size_t size, const std::vector<std::size_t>& elements) {
  Subset s(size);
  for (std::size_t e : elements) s.insert(e);
  return s;
}

Subset Subset::from_code(std::size_t size, std::uint64_t code) {
  if (size > kWordBits) {
    throw DimensionError("Subset::from_code: carrier larger than 64 elements");
  }
  Subset s(size);
  if (size > 0) {
    s.words_[0] = code;
    s.clear_tail();
  }
  return s;
}

void Subset::check_index(std::size_t i) const {
  if (i >= size_) {
    throw IndexError("element " + std::to_string(i) + " outside carrier of size " +
                     std::to_string(size_));
  }
}

void Subset::check_same(const Subset& other) const {
  if (size_ != other.size_) {
    throw DimensionError("subsets over carriers of size " + std::to_string(size_) +
                         " and " + std::to_string(other.size_));
  }
}

void Subset::clear_tail() {
  const std::size_t rem = size_ % kWordBits;
  if (rem != 0) words_.back() &= (Word{1} << rem) - 1;
}

bool Subset::contains(std::size_t i) const {
  check_index(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Subset::insert(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] |= Word{1} << (i % kWordBits);
}

void Subset::erase(std::size_t i) {
  check_index(i);
  words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

std::size_t Subset::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Subset::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool Subset::is_full() const noexcept { return count() == size_; }

bool Subset::subset_of(const Subset& other) const {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::uint64_t Subset::code() const {
  if (size_ > kWordBits) {
    throw DimensionError("Subset::code: carrier larger than 64 elements");
  }
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> Subset::elements() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](std::size_t i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

Subset Subset::complement() const {
  Subset s = *this;
  for (Word& w : s.words_) w = ~w;
  s.clear_tail();
  return s;
}

Subset& Subset::operator&=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Subset& Subset::operator|=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  check_same(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(),
                                                b.words_.begin(), b.words_.end());
}

bool overlaps(const Subset& d, const Subset& e) {
  if (d.size() != e.size()) {
    throw DimensionError("overlaps: subsets over carriers of size " +
                         std::to_string(d.size()) + " and " + std::to_string(e.size()));
  }
  return !(d & e).empty();
}

}  // namespace bpair
