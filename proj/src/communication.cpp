#include "bpair/communication.hpp"

namespace bpair {

namespace {

struct StrategyInfo {
  Strategy strategy;
  std::string_view name;
  FormalDecoder delta;
  ConcreteDecoder nabla;
};

constexpr std::array<StrategyInfo, 9> kTable = {{
    {Strategy::BoxExt, "BOX_EXT", FormalDecoder::Box, ConcreteDecoder::Ext},
    {Strategy::DiamondRest, "DIAMOND_REST", FormalDecoder::Diamond, ConcreteDecoder::Rest},
    {Strategy::DiamondExt, "DIAMOND_EXT", FormalDecoder::Diamond, ConcreteDecoder::Ext},
    {Strategy::BoxRest, "BOX_REST", FormalDecoder::Box, ConcreteDecoder::Rest},
    {Strategy::ArrowExt, "ARROW_EXT", FormalDecoder::ArrowRight, ConcreteDecoder::Ext},
    {Strategy::ArrowRest, "ARROW_REST", FormalDecoder::ArrowRight, ConcreteDecoder::Rest},
    {Strategy::BoxArrowLeft, "BOX_ARROWLEFT", FormalDecoder::Box, ConcreteDecoder::ArrowLeft},
    {Strategy::DiamondArrowLeft, "DIAMOND_ARROWLEFT", FormalDecoder::Diamond,
     ConcreteDecoder::ArrowLeft},
    {Strategy::ArrowArrowLeft, "ARROW_ARROWLEFT", FormalDecoder::ArrowRight,
     ConcreteDecoder::ArrowLeft},
}};

const StrategyInfo& info(Strategy s) { return kTable[static_cast<std::size_t>(s)]; }

}  // namespace

std::string_view strategy_name(Strategy s) { return info(s).name; }

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (const auto& row : kTable) {
    if (row.name == name) return row.strategy;
  }
  return std::nullopt;
}

FormalDecoder delta_of(Strategy s) { return info(s).delta; }
ConcreteDecoder nabla_of(Strategy s) { return info(s).nabla; }

Subset apply(const BasicPair& bp, FormalDecoder delta, const Subset& d) {
  switch (delta) {
    case FormalDecoder::Box:
      return box(bp, d);
    case FormalDecoder::Diamond:
      return diamond(bp, d);
    case FormalDecoder::ArrowRight:
      return arrow_right(bp, d);
  }
  throw std::logic_error("unknown formal decoder");
}

Subset apply(const BasicPair& bp, ConcreteDecoder nabla, const Subset& u) {
  switch (nabla) {
    case ConcreteDecoder::Ext:
      return ext(bp, u);
    case ConcreteDecoder::Rest:
      return rest(bp, u);
    case ConcreteDecoder::ArrowLeft:
      return arrow_left(bp, u);
  }
  throw std::logic_error("unknown concrete decoder");
}

SubsetSystem subset_system(const BasicPair& bp, Strategy strategy) {
  const auto equal = [](const Subset& a, const Subset& b) { return a == b; };
  MessageSpace<Subset> concrete{
      [n = bp.points()](const Subset& d) { return d.size() == n; }, equal};
  MessageSpace<Subset> formal{
      [m = bp.indexes()](const Subset& u) { return u.size() == m; }, equal};
  const FormalDecoder delta = delta_of(strategy);
  const ConcreteDecoder nabla = nabla_of(strategy);
  return SubsetSystem(
      std::move(concrete), std::move(formal),
      [bp, delta](const Subset& d) { return apply(bp, delta, d); },
      [bp, nabla](const Subset& u) { return apply(bp, nabla, u); });
}

bool is_communicable(const BasicPair& bp, Strategy strategy, const Subset& d) {
  return apply(bp, nabla_of(strategy), apply(bp, delta_of(strategy), d)) == d;
}

SubsetClassification classify_subset(const BasicPair& bp, const Subset& d) {
  SubsetClassification c;
  c.subset = d;
  c.open = is_open(bp, d);
  c.closed = is_closed(bp, d);
  c.clopen = c.open && c.closed;
  c.box = box(bp, d);
  c.diamond = diamond(bp, d);
  c.arrow_right = arrow_right(bp, d);
  for (Strategy s : kAllStrategies) {
    c.communicable[static_cast<std::size_t>(s)] = is_communicable(bp, s, d);
  }
  return c;
}

}  // namespace bpair
