#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "bpair/basic_pair.hpp"
#include "bpair/errors.hpp"
#include "bpair/subset.hpp"

namespace bpair {

/// A collection of messages together with an equivalence on it.
template <class Message>
struct MessageSpace {
  std::function<bool(const Message&)> contains;
  std::function<bool(const Message&, const Message&)> equivalent;
};

/// Two message spaces with decoders in both directions.
///
/// A-side message m is communicable when ∇(Δ(m)) ~A m; B-side message m is
/// communicable when Δ(∇(m)) ~B m.
template <class MessageA, class MessageB>
class CommunicationSystem {
 public:
  using Delta = std::function<MessageB(const MessageA&)>;
  using Nabla = std::function<MessageA(const MessageB&)>;

  CommunicationSystem(MessageSpace<MessageA> a, MessageSpace<MessageB> b, Delta delta,
                      Nabla nabla)
      : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)), nabla_(std::move(nabla)) {}

  const MessageSpace<MessageA>& space_a() const noexcept { return a_; }
  const MessageSpace<MessageB>& space_b() const noexcept { return b_; }

  MessageB decode_ab(const MessageA& m) const {
    require(a_, m, "A");
    return delta_(m);
  }
  MessageA decode_ba(const MessageB& m) const {
    require(b_, m, "B");
    return nabla_(m);
  }

  bool is_communicable_a(const MessageA& m) const {
    return a_.equivalent(decode_ba(decode_ab(m)), m);
  }
  bool is_communicable_b(const MessageB& m) const {
    return b_.equivalent(decode_ab(decode_ba(m)), m);
  }

  /// Δ maps ~A-equivalent messages of `sample` to ~B-equivalent ones.
  bool delta_respects(std::span<const MessageA> sample) const {
    return respects(sample, a_, b_, [this](const MessageA& m) { return decode_ab(m); });
  }
  /// ∇ maps ~B-equivalent messages of `sample` to ~A-equivalent ones.
  bool nabla_respects(std::span<const MessageB> sample) const {
    return respects(sample, b_, a_, [this](const MessageB& m) { return decode_ba(m); });
  }

 private:
  template <class M>
  static void require(const MessageSpace<M>& space, const M& m, const char* side) {
    if (space.contains && !space.contains(m)) {
      throw DimensionError(std::string("message not in space ") + side);
    }
  }

  template <class From, class To, class F>
  static bool respects(std::span<const From> sample, const MessageSpace<From>& from,
                       const MessageSpace<To>& to, F&& decode) {
    for (std::size_t i = 0; i < sample.size(); ++i) {
      for (std::size_t j = i; j < sample.size(); ++j) {
        if (from.equivalent(sample[i], sample[j]) &&
            !to.equivalent(decode(sample[i]), decode(sample[j]))) {
          return false;
        }
      }
    }
    return true;
  }

  MessageSpace<MessageA> a_;
  MessageSpace<MessageB> b_;
  Delta delta_;
  Nabla nabla_;
};

/// Decoding strategies between 𝒫X and 𝒫S. The name fixes Δ and ∇.
enum class Strategy {
  BoxExt,
  DiamondRest,
  DiamondExt,
  BoxRest,
  ArrowExt,
  ArrowRest,
  BoxArrowLeft,
  DiamondArrowLeft,
  ArrowArrowLeft,
};

inline constexpr std::array<Strategy, 9> kAllStrategies = {
    Strategy::BoxExt,       Strategy::DiamondRest,      Strategy::DiamondExt,
    Strategy::BoxRest,      Strategy::ArrowExt,         Strategy::ArrowRest,
    Strategy::BoxArrowLeft, Strategy::DiamondArrowLeft, Strategy::ArrowArrowLeft,
};

enum class FormalDecoder { Box, Diamond, ArrowRight };
enum class ConcreteDecoder { Ext, Rest, ArrowLeft };

/// Canonical name, e.g. "BOX_EXT".
std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);
FormalDecoder delta_of(Strategy s);
ConcreteDecoder nabla_of(Strategy s);

Subset apply(const BasicPair& bp, FormalDecoder delta, const Subset& d);
Subset apply(const BasicPair& bp, ConcreteDecoder nabla, const Subset& u);

using SubsetSystem = CommunicationSystem<Subset, Subset>;

/// ((𝒫X, =), (𝒫S, =), Δ, ∇) for the given strategy.
SubsetSystem subset_system(const BasicPair& bp, Strategy strategy);

/// ∇(Δ(D)) = D, evaluated directly without building a system.
bool is_communicable(const BasicPair& bp, Strategy strategy, const Subset& d);

struct SubsetClassification {
  Subset subset;
  bool open = false;
  bool closed = false;
  bool clopen = false;
  Subset box;
  Subset diamond;
  Subset arrow_right;
  std::array<bool, kAllStrategies.size()> communicable{};

  bool communicable_under(Strategy s) const {
    return communicable[static_cast<std::size_t>(s)];
  }
};

SubsetClassification classify_subset(const BasicPair& bp, const Subset& d);

}  // namespace bpair
