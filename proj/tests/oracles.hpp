#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the search or closed-form code they are used to check.

#include <cstdint>
#include <map>
#include <vector>

#include "rgtc/analytic.hpp"
#include "rgtc/graph.hpp"
#include "rgtc/rational.hpp"

namespace oracle {

using rgtc::BigInt;
using rgtc::Graph;
using rgtc::Rational;

std::size_t num_pairs(std::size_t n);
// Graph whose edge k (lexicographic pair order) is present iff bit k is set.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

bool is_clique_mask(const Graph& g, std::uint32_t mask);
std::vector<std::uint32_t> clique_masks(const Graph& g);  // includes the empty set

std::size_t omega(const Graph& g);
std::vector<std::uint64_t> f_vector(const Graph& g);
std::vector<std::uint32_t> maximal_clique_masks(const Graph& g);

// Ordered s-tuples of pairwise disjoint r-cliques, by direct enumeration.
std::uint64_t ordered_multicliques(const Graph& g, std::size_t s, std::size_t r);

struct Moments {
  Rational first;   // E(X)
  Rational second;  // E(X^2)
};
// Exact moments of X_{r,s} over all graphs on n vertices.
Moments exhaustive_moments(std::size_t n, const Rational& p, std::size_t s, std::size_t r);

// Every s x s matrix over {0..r} passing the row/column sum filter.
std::vector<std::vector<unsigned>> brute_D(std::size_t s, std::size_t r);

// Fraction of pairs (W, W') in W(s)^2 with each intersection type, found by
// listing all tuples of disjoint r-subsets of [n].
std::map<std::vector<unsigned>, Rational> intersection_type_frequencies(std::size_t n, std::size_t s, std::size_t r);

}  // namespace oracle
