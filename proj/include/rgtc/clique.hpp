#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rgtc/graph.hpp"

namespace rgtc {

struct CliqueReport {
  std::size_t omega = 0;
  VertexSet witness;  // sorted, |witness| == omega
};

struct SearchBudget {
  // Maximum number of branch-and-bound nodes; 0 means unlimited.
  std::uint64_t max_nodes = 0;
};

/// Exact maximum clique by bitset branch-and-bound with a greedy-coloring
/// bound. Vertices are ordered by descending degree, ties by index.
/// Throws BudgetExceeded when the node budget is exhausted.
CliqueReport clique_number(const Graph& g, SearchBudget budget = {});

/// Maximum clique of the subgraph induced by `allowed`.
CliqueReport max_clique_within(const Graph& g, const Bitset& allowed, SearchBudget budget = {});

bool has_clique(const Graph& g, std::size_t k, SearchBudget budget = {});

/// Bron–Kerbosch with Tomita pivoting. The visitor receives each maximal
/// clique (sorted) exactly once and may return false to stop early.
/// `cap` > 0 bounds the number emitted; one more throws BudgetExceeded.
void enumerate_maximal_cliques(const Graph& g, const std::function<bool(const VertexSet&)>& visit,
                               std::uint64_t cap = 0);

std::vector<VertexSet> maximal_cliques(const Graph& g, std::uint64_t cap = 0);

/// f[k] = number of k-vertex cliques, f[0] = 1. Size is omega + 1.
std::vector<BigInt> clique_f_vector(const Graph& g);

/// Number of colors used by greedy sequential coloring of `candidates`
/// in index order. An upper bound on the clique number of the induced graph.
std::size_t greedy_color_bound(const Graph& g, const Bitset& candidates);

}  // namespace rgtc
