#pragma once

#include <cstdint>

#include "rgtc/graph.hpp"

namespace rgtc {

/// TC_s(K_Γ) together with an s-tuple of cliques attaining it.
struct TcsReport {
  std::size_t value = 0;
  std::vector<VertexSet> witness;
  std::size_t hdim = 0;  // clique number of the graph
};

inline constexpr std::uint64_t kDefaultMaximalCliqueCap = 1'000'000;

/// Maximum of Σ|V_l| - |∩V_l| over s-tuples of cliques, searched over
/// multisets of maximal cliques by branch-and-bound. For s = 1 the value is
/// the clique number.
TcsReport tcs_exact(const Graph& g, std::size_t s, std::uint64_t clique_cap = kDefaultMaximalCliqueCap);

inline constexpr std::size_t kBruteForceMaxVertices = 8;
inline constexpr std::size_t kBruteForceMaxParts = 4;

/// Exhaustive maximum over all s-tuples of clique subsets (empty sets
/// included). Limited to n <= 8 and 2 <= s <= 4.
std::size_t tcs_bruteforce(const Graph& g, std::size_t s);

struct TcsBounds {
  std::size_t lower = 0;     // (s-1) C(g)
  std::size_t upper = 0;     // s C(g)
  std::size_t aas_lower = 0; // s (C(g) - 1), informational
};
TcsBounds tcs_bounds(const Graph& g, std::size_t s);

/// Objective Σ|V_l| - |∩V_l| of an explicit tuple.
std::size_t tcs_objective(std::size_t n, const std::vector<VertexSet>& parts);

}  // namespace rgtc
