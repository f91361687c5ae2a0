#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rgtc/bitset.hpp"
#include "rgtc/rational.hpp"

namespace rgtc {

// Vertices are 0-indexed in this API and 1-indexed in every external format
// (DIMACS files, CLI output, error messages).
using Vertex = std::size_t;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph stored as one adjacency bitset per vertex.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t num_vertices() const { return rows_.size(); }
  std::size_t num_edges() const;
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::vector<Edge> edges() const;

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph petersen();

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<Bitset> rows_;
};

// Internal helper for constructors in this module; keeps Graph immutable for
// everyone else.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  void add_edge(Vertex u, Vertex v) {
    g_.rows_[u].set(v);
    g_.rows_[v].set(u);
  }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

struct GnpParams {
  std::size_t n = 0;
  Rational p{1, 2};
  std::uint64_t seed = 0;
};

/// Samples G(n,p). Pairs (i,j), i<j, are visited in lexicographic order and
/// each consumes one draw of std::mt19937_64 seeded with `seed`; the edge is
/// present iff the draw is below floor(p * 2^64) (p = 1 always present).
Graph sample_gnp(const GnpParams& params);

/// Builds a graph from 0-indexed edges. Duplicates collapse; self-loops and
/// out-of-range endpoints throw DomainError.
Graph graph_from_edges(std::size_t n, std::span<const Edge> edges);

bool is_clique_set(const Graph& g, std::span<const Vertex> s);
bool is_clique_set(const Graph& g, const Bitset& s);

Graph read_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

Graph load_dimacs_file(const std::string& path);
void save_dimacs_file(const Graph& g, const std::string& path);

// Renders {1,2,3} with 1-indexed labels.
std::string format_vertex_set(std::span<const Vertex> s);

}  // namespace rgtc
