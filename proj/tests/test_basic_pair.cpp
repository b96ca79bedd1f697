#include <doctest.h>

#include <cstdint>

#include "bpair/basic_pair.hpp"
#include "bpair/definitions.hpp"
#include "bpair/errors.hpp"
#include "bpair/modelcheck.hpp"
#include "oracle.hpp"

using namespace bpair;

namespace {

BasicPair full_two_one() { return BasicPair(Rel::full(2, 1)); }

template <class F>
void for_each_pair(std::size_t max, F&& f) {
  for (std::size_t n = 0; n <= max; ++n)
    for (std::size_t m = 0; m <= max; ++m)
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * m)); ++code)
        f(oracle::make_pair(n, m, code), BasicPair(Rel::from_code(n, m, code)));
}

}  // namespace

TEST_CASE("the counterexample pair") {
  const BasicPair bp = paper_counterexample();
  CHECK(bp.points() == 2);
  CHECK(bp.indexes() == 3);
  CHECK(bp.forces().row(0) == Subset::of(3, {0, 2}));
  CHECK(bp.forces().row(1) == Subset::of(3, {1, 2}));
  CHECK(describe(bp) == "X=2 S=3 rel=101/011");
}

TEST_CASE("point and index neighbourhoods") {
  const BasicPair bp = paper_counterexample();
  const BasicPair id = BasicPair::identity(2);
  CHECK(ext_index(bp, 2) == Subset::of(2, {0, 1}));
  CHECK(ext_index(id, 0) == Subset::of(2, {0}));
  CHECK(diamond_point(bp, 0) == Subset::of(3, {0, 2}));
  CHECK(diamond_point(bp, 1) == Subset::of(3, {1, 2}));
  CHECK(diamond_point(id, 1) == Subset::of(2, {1}));
  CHECK_THROWS_AS((void)ext_index(bp, 3), IndexError);
}

TEST_CASE("modal operators on the counterexample pair") {
  const BasicPair bp = paper_counterexample();
  const BasicPair id = BasicPair::identity(2);
  CHECK(diamond(bp, Subset::of(2, {0})) == Subset::of(3, {0, 2}));
  CHECK(diamond(id, Subset::of(2, {0, 1})) == Subset::of(2, {0, 1}));
  CHECK(box(bp, Subset::of(2, {0})) == Subset::of(3, {0}));
  CHECK(box(id, Subset::of(2, {1})) == Subset::of(2, {1}));
  CHECK(ext(bp, Subset::of(3, {0, 2})) == Subset::of(2, {0, 1}));
  CHECK(ext(bp, Subset::of(3, {0})) == Subset::of(2, {0}));
  CHECK(rest(bp, Subset::of(3, {0, 2})) == Subset::of(2, {0}));
  CHECK(arrow_right(bp, Subset::of(2, {0})) == Subset::of(3, {0, 2}));
  CHECK(arrow_left(bp, Subset::of(3, {2})) == Subset::of(2, {0, 1}));
  CHECK(arrow_left(bp, Subset::of(3, {0, 2})) == Subset::of(2, {0}));
  CHECK_THROWS_AS((void)box(bp, Subset(3)), DimensionError);
  CHECK_THROWS_AS((void)ext(bp, Subset(2)), DimensionError);
}

TEST_CASE("open and closed subsets") {
  const BasicPair bp = paper_counterexample();
  CHECK(is_open(bp, Subset::of(2, {0})));
  CHECK(is_open(bp, Subset::full(2)));
  CHECK_FALSE(is_open(full_two_one(), Subset::of(2, {0})));
  CHECK(is_closed(bp, Subset::of(2, {1})));
  CHECK(is_closed(bp, Subset::full(2)));
  CHECK(is_closed(full_two_one(), Subset::full(2)));
  CHECK_FALSE(is_closed(full_two_one(), Subset::of(2, {0})));
  CHECK(is_clopen(bp, Subset::of(2, {0})));
  CHECK(is_open(full_two_one(), Subset(2)));
}

TEST_CASE("axioms") {
  const BasicPair bp = paper_counterexample();
  CHECK(satisfies_b1(bp));
  CHECK(satisfies_b2(bp));
  CHECK(is_hausdorff(bp));
  CHECK(satisfies_b1(BasicPair::identity(3)));
  CHECK(satisfies_b2(BasicPair::identity(3)));
  CHECK(is_hausdorff(BasicPair::identity(2)));
  // ext 0 = {0,1}, ext 1 = {1,2}: their meet {1} contains no extension.
  CHECK_FALSE(satisfies_b1(BasicPair(Rel::from_rows(
      2, {Subset::of(2, {0}), Subset::of(2, {0, 1}), Subset::of(2, {1})}))));
  CHECK_FALSE(satisfies_b2(BasicPair(Rel(1, 2))));
  CHECK(satisfies_b2(BasicPair(Rel(0, 3))));
  CHECK_FALSE(is_hausdorff(full_two_one()));
  CHECK(is_hausdorff(BasicPair(Rel(1, 0))));
  CHECK(is_hausdorff(BasicPair(Rel(0, 0))));
}

TEST_CASE("carrier validation") {
  CHECK_THROWS_AS(BasicPair(FiniteCarrier{2, "X"}, FiniteCarrier{3, "S"}, Rel(3, 2)),
                  DimensionError);
  const BasicPair bp(FiniteCarrier{2, "P"}, FiniteCarrier{1, "N"}, Rel::full(2, 1));
  CHECK(bp.concrete().label == "P");
  CHECK(bp.formal().label == "N");
}

TEST_CASE("basic-pair operators and predicates match the oracle up to 3x3") {
  for_each_pair(3, [](const oracle::Pair& op, const BasicPair& bp) {
    REQUIRE(satisfies_b1(bp) == oracle::b1(op));
    REQUIRE(satisfies_b2(bp) == oracle::b2(op));
    REQUIRE(is_hausdorff(bp) == oracle::hausdorff(op));
    for (std::uint64_t dc = 0; dc < (std::uint64_t{1} << op.points); ++dc) {
      const auto d = oracle::make_set(op.points, dc);
      const Subset sd = oracle::to_subset(d);
      REQUIRE(diamond(bp, sd) == oracle::to_subset(oracle::diamond(op, d)));
      REQUIRE(box(bp, sd) == oracle::to_subset(oracle::box(op, d)));
      REQUIRE(arrow_right(bp, sd) == oracle::to_subset(oracle::arrow_right(op, d)));
      REQUIRE(is_open(bp, sd) == oracle::is_open(op, d));
      REQUIRE(is_closed(bp, sd) == oracle::is_closed(op, d));
      REQUIRE(definitions::open_by_neighbourhoods(bp, sd) == oracle::is_open(op, d));
      REQUIRE(definitions::closed_by_neighbourhoods(bp, sd) == oracle::is_closed(op, d));
    }
    for (std::uint64_t uc = 0; uc < (std::uint64_t{1} << op.indexes); ++uc) {
      const auto u = oracle::make_set(op.indexes, uc);
      const Subset su = oracle::to_subset(u);
      REQUIRE(ext(bp, su) == oracle::to_subset(oracle::ext(op, u)));
      REQUIRE(rest(bp, su) == oracle::to_subset(oracle::rest(op, u)));
      REQUIRE(arrow_left(bp, su) == oracle::to_subset(oracle::arrow_left(op, u)));
    }
  });
}

TEST_CASE("interior and closure bounds, saturation and antitonicity") {
  for_each_pair(3, [](const oracle::Pair&, const BasicPair& bp) {
    const std::size_t n = bp.points(), m = bp.indexes();
    for (std::uint64_t dc = 0; dc < (std::uint64_t{1} << n); ++dc) {
      const Subset d = Subset::from_code(n, dc);
      REQUIRE(ext(bp, box(bp, d)).subset_of(d));
      REQUIRE(d.subset_of(rest(bp, diamond(bp, d))));
      for (std::uint64_t ec = 0; ec < (std::uint64_t{1} << n); ++ec) {
        if ((dc & ~ec) != 0) continue;
        REQUIRE(arrow_right(bp, Subset::from_code(n, ec)).subset_of(arrow_right(bp, d)));
      }
    }
    for (std::uint64_t uc = 0; uc < (std::uint64_t{1} << m); ++uc) {
      const Subset u = Subset::from_code(m, uc);
      REQUIRE(ext(bp, u) == ext(bp, box(bp, ext(bp, u))));
      REQUIRE(is_open(bp, ext(bp, u)));
      REQUIRE(rest(bp, u) == rest(bp, diamond(bp, rest(bp, u))));
      REQUIRE(is_closed(bp, rest(bp, u)));
      for (std::uint64_t vc = 0; vc < (std::uint64_t{1} << m); ++vc) {
        if ((uc & ~vc) != 0) continue;
        REQUIRE(arrow_left(bp, Subset::from_code(m, vc)).subset_of(arrow_left(bp, u)));
      }
    }
  });
}
