#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bpair/enumerate.hpp"
#include "bpair/topology.hpp"
#include "oracle.hpp"

using namespace bpair;

TEST_CASE("basic pair enumeration sizes") {
  CHECK(BasicPairEnumeration(1, 1).size() == 5);
  CHECK(BasicPairEnumeration(0, 0).size() == 1);
  const BasicPairEnumeration e(3, 3);
  std::uint64_t slice33 = 0;
  for (const ShapeSlice& s : e.slices())
    if (s.rows == 3 && s.cols == 3) slice33 = s.count;
  CHECK(slice33 == 512);
  CHECK(e.size() == 1 + 1 + 1 + 1 + 1 + 2 + 4 + 8 + 1 + 4 + 16 + 64 + 1 + 8 + 64 + 512);
}

TEST_CASE("basic pair enumeration is exhaustive, unique and ordered") {
  const BasicPairEnumeration e(3, 2);
  std::set<std::tuple<std::size_t, std::size_t, std::uint64_t>> seen;
  std::tuple<std::size_t, std::size_t, std::uint64_t> last{0, 0, 0};
  bool first = true;
  for (const BasicPair& bp : e) {
    const auto key = std::make_tuple(bp.points(), bp.indexes(), bp.forces().code());
    if (!first) CHECK(last < key);
    first = false;
    last = key;
    seen.insert(key);
  }
  CHECK(seen.size() == e.size());
  CHECK_THROWS_AS((void)e.at(e.size()), std::out_of_range);
}

TEST_CASE("relation bounds") {
  EnumSpec spec;
  auto b = spec.relation_bounds();
  CHECK(b.x == 2);
  CHECK(b.s == 2);
  CHECK(b.y == 2);
  CHECK(b.t == 2);
  spec.max_x = 1;
  b = spec.relation_bounds();
  CHECK(b.x == 1);
  CHECK(b.y == 1);
  spec = EnumSpec{};
  spec.max_y = 3;
  b = spec.relation_bounds();
  CHECK(b.x == 3);
  CHECK(b.y == 3);
  CHECK(b.t == 3);
  spec.max_x = 9;
  spec.max_s = 9;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK_NOTHROW(EnumSpec{}.validate());
}

TEST_CASE("setting enumeration covers every pair of pairs") {
  const SettingEnumeration settings({1, 1, 1, 1});
  // Five basic pairs within 1x1, so 25 settings.
  CHECK(settings.size() == 25);
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < settings.size(); ++i) {
    const PairedSetting ps = settings.at(i);
    seen.insert(std::to_string(ps.source.points()) + std::to_string(ps.source.indexes()) +
                std::to_string(ps.source.forces().code()) + "|" +
                std::to_string(ps.target.points()) + std::to_string(ps.target.indexes()) +
                std::to_string(ps.target.forces().code()));
  }
  CHECK(seen.size() == 25);
}

TEST_CASE("seeded random settings are reproducible") {
  const RandomSettingSource a{42, 3}, b{42, 3}, c{43, 3};
  const auto xs = a.instances(50), ys = b.instances(50), zs = c.instances(50);
  bool differs = false;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(xs[i].first.source == ys[i].first.source);
    CHECK(xs[i].first.target == ys[i].first.target);
    CHECK(xs[i].second == ys[i].second);
    CHECK(xs[i].first.source.points() == 3);
    CHECK(xs[i].second.source_size() == 3);
    differs = differs || !(xs[i].second == zs[i].second);
  }
  CHECK(differs);
}

TEST_CASE("topology constructors") {
  const FiniteTopology s = sierpinski_topology();
  CHECK_NOTHROW(s.validate());
  CHECK(s.is_open(Subset::of(2, {0})));
  CHECK_FALSE(s.is_open(Subset::of(2, {1})));
  CHECK(s.is_closed(Subset::of(2, {1})));
  CHECK(discrete_topology(3).opens.size() == 8);
  CHECK(indiscrete_topology(3).opens.size() == 2);
  CHECK(indiscrete_topology(0).opens.size() == 1);
  FiniteTopology bad{FiniteCarrier{2, "Ω"}, {Subset(2), Subset::of(2, {0})}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  FiniteTopology discrete_two{FiniteCarrier{2, "Ω"},
                            {Subset(2), Subset::of(2, {0}), Subset::of(2, {1}), Subset::full(2)}};
  CHECK_NOTHROW(discrete_two.validate());
  FiniteTopology three{FiniteCarrier{3, "Ω"},
                       {Subset(3), Subset::of(3, {0}), Subset::of(3, {1}), Subset::full(3)}};
  CHECK_THROWS_AS(three.validate(), std::invalid_argument);
}

TEST_CASE("topology counts agree with the preorder count") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(oracle::count_preorders(n) == expected[n]);
    const auto all = enumerate_topologies(n);
    CHECK(all.size() == oracle::count_preorders(n));
    for (const FiniteTopology& t : all) REQUIRE_NOTHROW(t.validate());
  }
  CHECK_THROWS_AS((void)enumerate_topologies(5), std::invalid_argument);
}

TEST_CASE("topologies as basic pairs") {
  const BasicPair s = from_topology(sierpinski_topology());
  CHECK(s.points() == 2);
  CHECK(s.indexes() == 3);
  CHECK(ext_index(s, 0).empty());
  CHECK(ext_index(s, 1) == Subset::of(2, {0}));
  CHECK(ext_index(s, 2) == Subset::full(2));
  const BasicPair d1 = from_topology(discrete_topology(1));
  CHECK(d1.points() == 1);
  CHECK(d1.indexes() == 2);
  const BasicPair i2 = from_topology(indiscrete_topology(2));
  CHECK(i2.indexes() == 2);
  CHECK(ext_index(i2, 0).empty());
  CHECK(ext_index(i2, 1) == Subset::full(2));
}

TEST_CASE("indistinguishability classes") {
  const auto s = t0_points(sierpinski_topology());
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Subset::of(2, {0}));
  CHECK(s[1] == Subset::of(2, {1}));
  const auto i = t0_points(indiscrete_topology(2));
  REQUIRE(i.size() == 1);
  CHECK(i[0] == Subset::full(2));
  CHECK(t0_points(discrete_topology(2)).size() == 2);
  CHECK(t0_points(indiscrete_topology(0)).empty());
}

TEST_CASE("intersections of opens") {
  const auto s = intersections_of_opens(sierpinski_topology());
  CHECK(s.size() == 3);
  // Every topology is closed under finite intersection, so the family equals the opens.
  for (const FiniteTopology& t : enumerate_topologies(3)) {
    auto opens = t.opens;
    std::sort(opens.begin(), opens.end());
    CHECK(intersections_of_opens(t) == opens);
  }
}
