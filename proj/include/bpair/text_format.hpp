#pragma once

// Line-oriented documents:
//
//   basicpair            relation             topology
//   X <n>                FROM <n>             OMEGA <n>
//   S <m>                TO <m>               opens
//   [labels X a b ...]   rel                  {}
//   [labels S c d ...]   <n rows of m bits>   {0}
//   rel                                       {0,1}
//   <n rows of m bits>
//
// '#' starts a comment; blank lines are ignored. Row j, column k is the
// entry (j, k). Zero-width rows are omitted, so a matrix with m = 0 has no
// row lines at all.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bpair/basic_pair.hpp"
#include "bpair/rel.hpp"
#include "bpair/subset.hpp"
#include "bpair/topology.hpp"

namespace bpair {

struct BasicPairDocument {
  BasicPair pair;
  /// Empty, or one label per element.
  std::vector<std::string> point_labels;
  std::vector<std::string> index_labels;

  friend bool operator==(const BasicPairDocument&, const BasicPairDocument&) = default;
};

/// All parsers throw ParseError with a 1-based line and column.
BasicPairDocument parse_basic_pair_document(std::string_view text);
BasicPair parse_basic_pair(std::string_view text);
std::string print_basic_pair(const BasicPair& bp);
std::string print_basic_pair_document(const BasicPairDocument& doc);

Rel parse_relation(std::string_view text);
std::string print_relation(const Rel& r);

FiniteTopology parse_topology(std::string_view text);
std::string print_topology(const FiniteTopology& t);

/// "{0,2}" or "{}" over a carrier of the given size.
Subset parse_subset_literal(std::string_view text, std::size_t carrier_size);

}  // namespace bpair
