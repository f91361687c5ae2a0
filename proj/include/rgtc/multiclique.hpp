#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgtc/graph.hpp"

namespace rgtc {

/// Ordered s-tuple of pairwise disjoint r-cliques.
struct MultiClique {
  std::size_t r = 0;
  std::vector<VertexSet> parts;
};

enum class Strategy { Exact, Greedy };

Strategy parse_strategy(std::string_view s);
std::string_view to_string(Strategy s);

struct MultiCliqueResult {
  std::optional<MultiClique> witness;
  // False when the search was greedy and found nothing: absence is not a
  // proof of non-existence.
  bool conclusive = true;
};

struct MultiCliqueBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
};

/// Exact: complete backtracking over canonical part-sets. Greedy: repeatedly
/// take a maximum clique of the residual graph, keep its r lowest-indexed
/// vertices and delete them.
MultiCliqueResult find_multiclique(const Graph& g, std::size_t s, std::size_t r, Strategy strategy,
                                   MultiCliqueBudget budget = {});

/// Number of ordered s-tuples of pairwise disjoint r-cliques (X_{r,s}).
BigInt count_multicliques(const Graph& g, std::size_t s, std::size_t r, MultiCliqueBudget budget = {});

/// Checks disjointness, part sizes and completeness of every part.
bool is_valid_multiclique(const Graph& g, const MultiClique& mc, std::size_t s);

/// Greedy peeling without truncation: the sizes of s successively extracted
/// maximum cliques. The minimum is a certified multi-clique size.
std::vector<std::size_t> greedy_peel_sizes(const Graph& g, std::size_t s);

}  // namespace rgtc
