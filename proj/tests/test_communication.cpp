#include <doctest.h>

#include <cstdint>
#include <string>
#include <vector>

#include "bpair/communication.hpp"
#include "bpair/errors.hpp"
#include "bpair/modelcheck.hpp"
#include "oracle.hpp"

using namespace bpair;

TEST_CASE("strategy names round-trip") {
  for (Strategy s : kAllStrategies) {
    const auto parsed = parse_strategy(strategy_name(s));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == s);
  }
  CHECK(strategy_name(Strategy::BoxExt) == "BOX_EXT");
  CHECK(strategy_name(Strategy::ArrowArrowLeft) == "ARROW_ARROWLEFT");
  CHECK_FALSE(parse_strategy("BOX").has_value());
}

TEST_CASE("strategies fix both decoders") {
  CHECK(delta_of(Strategy::BoxExt) == FormalDecoder::Box);
  CHECK(nabla_of(Strategy::BoxExt) == ConcreteDecoder::Ext);
  CHECK(delta_of(Strategy::DiamondRest) == FormalDecoder::Diamond);
  CHECK(nabla_of(Strategy::DiamondRest) == ConcreteDecoder::Rest);
  CHECK(delta_of(Strategy::ArrowArrowLeft) == FormalDecoder::ArrowRight);
  CHECK(nabla_of(Strategy::ArrowArrowLeft) == ConcreteDecoder::ArrowLeft);
  CHECK(delta_of(Strategy::DiamondArrowLeft) == FormalDecoder::Diamond);
  CHECK(nabla_of(Strategy::ArrowRest) == ConcreteDecoder::Rest);
}

TEST_CASE("subset systems on the counterexample pair") {
  const BasicPair bp = paper_counterexample();
  const Subset zero = Subset::of(2, {0});
  CHECK(subset_system(bp, Strategy::BoxExt).is_communicable_a(zero));
  CHECK_FALSE(subset_system(bp, Strategy::DiamondExt).is_communicable_a(zero));
  CHECK(subset_system(BasicPair::identity(2), Strategy::BoxExt)
            .is_communicable_b(Subset::of(2, {0})));
  CHECK_FALSE(subset_system(bp, Strategy::DiamondExt).is_communicable_b(Subset::of(3, {2})));
  CHECK_THROWS_AS((void)subset_system(bp, Strategy::BoxExt).is_communicable_a(Subset(3)),
                  DimensionError);
  CHECK_THROWS_AS((void)subset_system(bp, Strategy::BoxExt).decode_ba(Subset(2)),
                  DimensionError);
}

TEST_CASE("a system with identity decoders communicates everything") {
  MessageSpace<int> ints{[](const int&) { return true; },
                         [](const int& a, const int& b) { return a == b; }};
  CommunicationSystem<int, int> cs(ints, ints, [](const int& m) { return m; },
                                   [](const int& m) { return m; });
  for (int m = -3; m <= 3; ++m) {
    CHECK(cs.is_communicable_a(m));
    CHECK(cs.is_communicable_b(m));
  }
  const std::vector<int> sample{1, 2, 3};
  CHECK(cs.delta_respects(sample));
  CHECK(cs.nabla_respects(sample));
}

TEST_CASE("equivalence respect is detected") {
  MessageSpace<int> parity{nullptr, [](const int& a, const int& b) { return (a - b) % 2 == 0; }};
  MessageSpace<int> exact{nullptr, [](const int& a, const int& b) { return a == b; }};
  CommunicationSystem<int, int> cs(parity, exact, [](const int& m) { return m; },
                                   [](const int& m) { return m; });
  const std::vector<int> sample{0, 2};
  CHECK_FALSE(cs.delta_respects(sample));
  CHECK(cs.nabla_respects(sample));
  // B-side messages are compared under the B equivalence.
  CommunicationSystem<int, int> halves(
      exact, parity, [](const int& m) { return m + 2; }, [](const int& m) { return m; });
  CHECK(halves.is_communicable_b(5));
  CHECK_FALSE(halves.is_communicable_a(5));
}

TEST_CASE("system decoders are the named operators") {
  const BasicPair bp = paper_counterexample();
  for (Strategy s : kAllStrategies) {
    const SubsetSystem cs = subset_system(bp, s);
    for (std::uint64_t c = 0; c < 4; ++c) {
      const Subset d = Subset::from_code(2, c);
      CHECK(cs.decode_ab(d) == apply(bp, delta_of(s), d));
      CHECK(cs.is_communicable_a(d) == is_communicable(bp, s, d));
    }
    for (std::uint64_t c = 0; c < 8; ++c) {
      const Subset u = Subset::from_code(3, c);
      CHECK(cs.decode_ba(u) == apply(bp, nabla_of(s), u));
    }
  }
  CHECK(apply(bp, FormalDecoder::Box, Subset::of(2, {0})) == box(bp, Subset::of(2, {0})));
  CHECK(apply(bp, ConcreteDecoder::ArrowLeft, Subset::of(3, {2})) ==
        arrow_left(bp, Subset::of(3, {2})));
}

TEST_CASE("classification of the counterexample subsets") {
  const BasicPair bp = paper_counterexample();
  for (std::size_t x : {0, 1}) {
    const SubsetClassification c = classify_subset(bp, Subset::of(2, {x}));
    CHECK(c.open);
    CHECK(c.closed);
    CHECK(c.clopen);
    CHECK_FALSE(c.communicable_under(Strategy::DiamondExt));
    CHECK_FALSE(c.communicable_under(Strategy::BoxRest));
    CHECK(c.communicable_under(Strategy::BoxExt));
    CHECK(c.communicable_under(Strategy::DiamondRest));
    CHECK(c.communicable_under(Strategy::ArrowArrowLeft));
  }
  const SubsetClassification zero = classify_subset(bp, Subset::of(2, {0}));
  CHECK(zero.box == Subset::of(3, {0}));
  CHECK(zero.diamond == Subset::of(3, {0, 2}));
  CHECK(zero.arrow_right == Subset::of(3, {0, 2}));
  CHECK(classify_subset(bp, Subset(2)).open);

  const SubsetClassification id = classify_subset(BasicPair::identity(2), Subset::of(2, {0}));
  for (Strategy s : {Strategy::BoxExt, Strategy::DiamondRest, Strategy::DiamondExt,
                     Strategy::BoxRest})
    CHECK(id.communicable_under(s));
}

TEST_CASE("communication characterisations over all pairs up to 3x3") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * m)); ++code) {
        const auto op = oracle::make_pair(n, m, code);
        const BasicPair bp(Rel::from_code(n, m, code));
        for (std::uint64_t dc = 0; dc < (std::uint64_t{1} << n); ++dc) {
          const auto d = oracle::make_set(n, dc);
          const Subset sd = oracle::to_subset(d);
          const bool open = oracle::is_open(op, d), closed = oracle::is_closed(op, d);
          REQUIRE(is_communicable(bp, Strategy::BoxExt, sd) == open);
          REQUIRE(is_communicable(bp, Strategy::DiamondRest, sd) == closed);
          if (is_communicable(bp, Strategy::DiamondExt, sd)) REQUIRE(open);
          if (is_communicable(bp, Strategy::BoxRest, sd)) REQUIRE(closed);
          // Arrow round trips, evaluated directly on the oracle side.
          REQUIRE(is_communicable(bp, Strategy::ArrowArrowLeft, sd) ==
                  (oracle::arrow_left(op, oracle::arrow_right(op, d)) == d));
          REQUIRE(is_communicable(bp, Strategy::ArrowExt, sd) ==
                  (oracle::ext(op, oracle::arrow_right(op, d)) == d));
          REQUIRE(is_communicable(bp, Strategy::DiamondArrowLeft, sd) ==
                  (oracle::arrow_left(op, oracle::diamond(op, d)) == d));
        }
      }
    }
  }
}
