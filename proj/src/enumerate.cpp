#include "bpair/enumerate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace bpair {

namespace {

constexpr std::size_t kMaxMatrixBits = 62;

std::uint64_t matrices(std::size_t rows, std::size_t cols) {
  return std::uint64_t{1} << (rows * cols);
}

template <class Slice>
const Slice& find_slice(const std::vector<Slice>& slices, std::uint64_t i) {
  auto it = std::upper_bound(slices.begin(), slices.end(), i,
                             [](std::uint64_t v, const Slice& s) { return v < s.offset; });
  return *std::prev(it);
}

Rel random_rel(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  const std::size_t bits = rows * cols;
  std::uint64_t code = rng();
  if (bits < 64) code &= (std::uint64_t{1} << bits) - 1;
  return Rel::from_code(rows, cols, code);
}

}  // namespace

EnumSpec::RelationBounds EnumSpec::relation_bounds() const {
  if (!max_y && !max_t) {
    const std::size_t x = std::min<std::size_t>(max_x, 2);
    const std::size_t s = std::min<std::size_t>(max_s, 2);
    return {x, s, x, s};
  }
  return {max_x, max_s, max_y.value_or(max_x), max_t.value_or(max_s)};
}

void EnumSpec::validate() const {
  auto check = [](std::size_t a, std::size_t b, const char* what) {
    if (a * b > kMaxMatrixBits) {
      throw std::invalid_argument(std::string("enumeration bound too large: ") + what);
    }
  };
  check(max_x, max_s, "max_x * max_s");
  const auto rb = relation_bounds();
  check(rb.y, rb.t, "max_y * max_t");
  check(rb.x, rb.y, "max_x * max_y");
  check(rb.s, rb.t, "max_s * max_t");
  check(rb.x, rb.t, "max_x * max_t");
  check(sample_size, sample_size, "sample_size^2");
}

BasicPairEnumeration::BasicPairEnumeration(std::size_t max_x, std::size_t max_s) {
  if (max_x * max_s > kMaxMatrixBits) {
    throw std::invalid_argument("BasicPairEnumeration: more than 2^62 matrices per shape");
  }
  for (std::size_t x = 0; x <= max_x; ++x) {
    for (std::size_t s = 0; s <= max_s; ++s) {
      const std::uint64_t count = matrices(x, s);
      slices_.push_back({x, s, total_, count});
      total_ += count;
    }
  }
}

BasicPair BasicPairEnumeration::at(std::uint64_t i) const {
  if (i >= total_) throw std::out_of_range("BasicPairEnumeration::at");
  const auto& slice = find_slice(slices_, i);
  return BasicPair(Rel::from_code(slice.rows, slice.cols, i - slice.offset));
}

BasicPairEnumeration enumerate_basic_pairs(const EnumSpec& spec) {
  return BasicPairEnumeration(spec);
}

SettingEnumeration::SettingEnumeration(const EnumSpec::RelationBounds& b) {
  for (std::size_t x = 0; x <= b.x; ++x) {
    for (std::size_t s = 0; s <= b.s; ++s) {
      for (std::size_t y = 0; y <= b.y; ++y) {
        for (std::size_t t = 0; t <= b.t; ++t) {
          const std::uint64_t count = matrices(x, s) * matrices(y, t);
          slices_.push_back({x, s, y, t, total_, count});
          total_ += count;
        }
      }
    }
  }
}

PairedSetting SettingEnumeration::at(std::uint64_t i) const {
  if (i >= total_) throw std::out_of_range("SettingEnumeration::at");
  const auto& slice = find_slice(slices_, i);
  const std::uint64_t local = i - slice.offset;
  const std::uint64_t per_source = matrices(slice.y, slice.t);
  return PairedSetting{BasicPair(Rel::from_code(slice.x, slice.s, local / per_source)),
                       BasicPair(Rel::from_code(slice.y, slice.t, local % per_source))};
}

std::vector<PairedSetting> RandomSettingSource::settings(std::size_t count) const {
  std::mt19937_64 rng(seed);
  std::vector<PairedSetting> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BasicPair source(random_rel(rng, size, size));
    BasicPair target(random_rel(rng, size, size));
    out.push_back({std::move(source), std::move(target)});
  }
  return out;
}

std::vector<std::pair<PairedSetting, Rel>> RandomSettingSource::instances(
    std::size_t count) const {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<PairedSetting, Rel>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    BasicPair source(random_rel(rng, size, size));
    BasicPair target(random_rel(rng, size, size));
    Rel r = random_rel(rng, size, size);
    out.push_back({PairedSetting{std::move(source), std::move(target)}, std::move(r)});
  }
  return out;
}

}  // namespace bpair
