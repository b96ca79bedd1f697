#include "bpair/rel.hpp"

#include <string>

#include "bpair/errors.hpp"

namespace bpair {

namespace {

void require_size(const Subset& s, std::size_t expected, const char* op) {
  if (s.size() != expected) {
    throw DimensionError(std::string(op) + ": subset over carrier of size " +
                         std::to_string(s.size()) + ", expected " +
                         std::to_string(expected));
  }
}

}  // namespace

Rel::Rel(std::size_t source_size, std::size_t target_size)
    : source_size_(source_size),
      target_size_(target_size),
      rows_(source_size, Subset(target_size)),
      cols_(target_size, Subset(source_size)) {}

Rel Rel::identity(std::size_t n) {
  Rel r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

Rel Rel::full(std::size_t source_size, std::size_t target_size) {
  Rel r(source_size, target_size);
  for (auto& row : r.rows_) row = Subset::full(target_size);
  for (auto& col : r.cols_) col = Subset::full(source_size);
  return r;
}

Rel Rel::from_rows(std::size_t target_size, const std::vector<Subset>& rows) {
  Rel r(rows.size(), target_size);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    require_size(rows[x], target_size, "Rel::from_rows");
    rows[x].for_each([&](std::size_t y) { r.set(x, y); });
  }
  return r;
}

Rel Rel::from_pairs(std::size_t source_size, std::size_t target_size,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Rel r(source_size, target_size);
  for (auto [x, y] : pairs) r.set(x, y);
  return r;
}

Rel Rel::from_code(std::size_t source_size, std::size_t target_size, std::uint64_t code) {
  if (source_size * target_size > Subset::kWordBits) {
    throw DimensionError("Rel::from_code: more than 64 matrix entries");
  }
  Rel r(source_size, target_size);
  const std::uint64_t row_mask = (std::uint64_t{1} << target_size) - 1;
  for (std::size_t x = 0; x < source_size; ++x) {
    r.rows_[x] = Subset::from_code(target_size, (code >> (x * target_size)) & row_mask);
    r.rows_[x].for_each([&](std::size_t y) { r.cols_[y].insert(x); });
  }
  return r;
}

bool Rel::holds(std::size_t x, std::size_t y) const {
  if (x >= source_size_ || y >= target_size_) {
    throw IndexError("Rel::holds: (" + std::to_string(x) + "," + std::to_string(y) +
                     ") outside " + std::to_string(source_size_) + "x" +
                     std::to_string(target_size_));
  }
  return rows_[x].contains(y);
}

void Rel::set(std::size_t x, std::size_t y, bool value) {
  if (x >= source_size_ || y >= target_size_) {
    throw IndexError("Rel::set: (" + std::to_string(x) + "," + std::to_string(y) +
                     ") outside " + std::to_string(source_size_) + "x" +
                     std::to_string(target_size_));
  }
  if (value) {
    rows_[x].insert(y);
    cols_[y].insert(x);
  } else {
    rows_[x].erase(y);
    cols_[y].erase(x);
  }
}

const Subset& Rel::row(std::size_t x) const {
  if (x >= source_size_) {
    throw IndexError("row " + std::to_string(x) + " outside source of size " +
                     std::to_string(source_size_));
  }
  return rows_[x];
}

const Subset& Rel::col(std::size_t y) const {
  if (y >= target_size_) {
    throw IndexError("column " + std::to_string(y) + " outside target of size " +
                     std::to_string(target_size_));
  }
  return cols_[y];
}

std::size_t Rel::pair_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.count();
  return n;
}

bool Rel::empty() const { return pair_count() == 0; }

std::uint64_t Rel::code() const {
  if (source_size_ * target_size_ > Subset::kWordBits) {
    throw DimensionError("Rel::code: more than 64 matrix entries");
  }
  std::uint64_t code = 0;
  for (std::size_t x = 0; x < source_size_; ++x) {
    code |= rows_[x].code() << (x * target_size_);
  }
  return code;
}

Rel Rel::converse() const {
  Rel r;
  r.source_size_ = target_size_;
  r.target_size_ = source_size_;
  r.rows_ = cols_;
  r.cols_ = rows_;
  return r;
}

bool Rel::subset_of(const Rel& other) const {
  if (source_size_ != other.source_size_ || target_size_ != other.target_size_) {
    throw DimensionError("Rel::subset_of: relations of different shape");
  }
  for (std::size_t x = 0; x < source_size_; ++x) {
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  }
  return true;
}

const Subset& row(const Rel& r, std::size_t x) { return r.row(x); }
const Subset& col(const Rel& r, std::size_t y) { return r.col(y); }

Subset existential_image(const Rel& r, const Subset& d) {
  require_size(d, r.source_size(), "existential_image");
  Subset out(r.target_size());
  d.for_each([&](std::size_t x) { out |= r.row(x); });
  return out;
}

// col(y) ⊆ D  iff  col(y) misses ∁D  iff  y ∉ r(∁D)
Subset universal_coimage(const Rel& r, const Subset& d) {
  require_size(d, r.source_size(), "universal_coimage");
  return existential_image(r, d.complement()).complement();
}

Subset existential_preimage(const Rel& r, const Subset& e) {
  require_size(e, r.target_size(), "existential_preimage");
  Subset out(r.source_size());
  e.for_each([&](std::size_t y) { out |= r.col(y); });
  return out;
}

Subset universal_preimage(const Rel& r, const Subset& e) {
  require_size(e, r.target_size(), "universal_preimage");
  return existential_preimage(r, e.complement()).complement();
}

Rel compose(const Rel& s, const Rel& r) {
  if (r.target_size() != s.source_size()) {
    throw DimensionError("compose: middle carriers of size " +
                         std::to_string(r.target_size()) + " and " +
                         std::to_string(s.source_size()));
  }
  std::vector<Subset> rows;
  rows.reserve(r.source_size());
  for (std::size_t a = 0; a < r.source_size(); ++a) {
    rows.push_back(existential_image(s, r.row(a)));
  }
  return Rel::from_rows(s.target_size(), rows);
}

}  // namespace bpair
