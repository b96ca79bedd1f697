#include "bpair/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bpair {

void FiniteTopology::validate() const {
  const std::size_t n = ground.size;
  for (const auto& o : opens) {
    if (o.size() != n) {
      throw std::invalid_argument("topology: open set " + o.to_string() +
                                  " is not over a ground set of size " + std::to_string(n));
    }
  }
  std::vector<Subset> sorted = opens;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("topology: repeated open set");
  }
  auto has = [&](const Subset& s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  if (!has(Subset(n))) throw std::invalid_argument("topology: ∅ is not open");
  if (!has(Subset::full(n))) throw std::invalid_argument("topology: Ω is not open");
  for (const auto& a : opens) {
    for (const auto& b : opens) {
      if (!has(a | b)) {
        throw std::invalid_argument("topology: not closed under union: " + a.to_string() +
                                    " ∪ " + b.to_string());
      }
      if (!has(a & b)) {
        throw std::invalid_argument("topology: not closed under intersection: " +
                                    a.to_string() + " ∩ " + b.to_string());
      }
    }
  }
}

bool FiniteTopology::is_open(const Subset& d) const {
  return std::find(opens.begin(), opens.end(), d) != opens.end();
}

bool FiniteTopology::is_closed(const Subset& d) const { return is_open(d.complement()); }

FiniteTopology discrete_topology(std::size_t n) {
  if (n > 6) throw std::invalid_argument("discrete_topology: ground set too large");
  FiniteTopology t{{n, "Ω"}, {}};
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
    t.opens.push_back(Subset::from_code(n, code));
  }
  return t;
}

FiniteTopology indiscrete_topology(std::size_t n) {
  FiniteTopology t{{n, "Ω"}, {Subset(n)}};
  if (n > 0) t.opens.push_back(Subset::full(n));
  return t;
}

FiniteTopology sierpinski_topology() {
  return FiniteTopology{{2, "Ω"}, {Subset(2), Subset::of(2, {0}), Subset::full(2)}};
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
  if (n > 4) throw std::invalid_argument("enumerate_topologies: ground set larger than 4");
  const std::uint64_t universe = std::uint64_t{1} << n;
  const std::uint64_t full = universe - 1;
  // Membership codes strictly between ∅ and Ω; each may or may not be open.
  std::vector<std::uint64_t> middle;
  for (std::uint64_t c = 1; c < full; ++c) middle.push_back(c);

  std::vector<FiniteTopology> out;
  std::vector<bool> in_family(universe);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << middle.size()); ++mask) {
    std::fill(in_family.begin(), in_family.end(), false);
    std::vector<std::uint64_t> family{0};
    in_family[0] = true;
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((mask >> i) & 1U) {
        family.push_back(middle[i]);
        in_family[middle[i]] = true;
      }
    }
    if (!in_family[full]) {
      family.push_back(full);
      in_family[full] = true;
    }
    bool closed = true;
    for (std::size_t i = 0; closed && i < family.size(); ++i) {
      for (std::size_t j = i + 1; closed && j < family.size(); ++j) {
        closed = in_family[family[i] | family[j]] && in_family[family[i] & family[j]];
      }
    }
    if (!closed) continue;
    std::sort(family.begin(), family.end());
    FiniteTopology t{{n, "Ω"}, {}};
    for (std::uint64_t c : family) t.opens.push_back(Subset::from_code(n, c));
    out.push_back(std::move(t));
  }
  return out;
}

BasicPair from_topology(const FiniteTopology& t) {
  t.validate();
  Rel member(t.ground.size, t.opens.size());
  for (std::size_t i = 0; i < t.opens.size(); ++i) {
    t.opens[i].for_each([&](std::size_t x) { member.set(x, i); });
  }
  return BasicPair(FiniteCarrier{t.ground.size, t.ground.label},
                   FiniteCarrier{t.opens.size(), "T"}, std::move(member));
}

std::vector<Subset> t0_points(const FiniteTopology& t) {
  const std::size_t n = t.ground.size;
  // Neighbourhood signature of x: which opens contain it.
  std::vector<Subset> signature(n, Subset(t.opens.size()));
  for (std::size_t i = 0; i < t.opens.size(); ++i) {
    t.opens[i].for_each([&](std::size_t x) { signature[x].insert(i); });
  }
  std::vector<Subset> classes;
  Subset assigned(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned.contains(x)) continue;
    Subset cls(n);
    for (std::size_t y = x; y < n; ++y) {
      if (signature[y] == signature[x]) cls.insert(y);
    }
    assigned |= cls;
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subset> intersections_of_opens(const FiniteTopology& t) {
  const std::size_t n = t.ground.size;
  std::vector<Subset> found{Subset::full(n)};
  for (const auto& o : t.opens) {
    if (std::find(found.begin(), found.end(), o) == found.end()) found.push_back(o);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Subset meet = found[i] & found[j];
      if (std::find(found.begin(), found.end(), meet) == found.end()) {
        found.push_back(std::move(meet));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace bpair
