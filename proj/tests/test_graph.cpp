#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rgtc/errors.hpp"
#include "rgtc/graph.hpp"

using namespace rgtc;

TEST_CASE("sample_gnp extremes") {
  for (std::uint64_t seed : {0ULL, 1ULL, 0xdeadbeefULL}) {
    Graph k5 = sample_gnp({5, 1, seed});
    CHECK(k5.num_edges() == 10);
    CHECK(k5 == Graph::complete(5));
    CHECK(sample_gnp({5, 0, seed}).num_edges() == 0);
  }
  CHECK_THROWS_AS(sample_gnp({5, Rational(3, 2), 0}), DomainError);
}

TEST_CASE("sample_gnp is deterministic and symmetric") {
  Graph a = sample_gnp({64, Rational(1, 2), 42});
  Graph b = sample_gnp({64, Rational(1, 2), 42});
  Graph c = sample_gnp({64, Rational(1, 2), 43});
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (Vertex u = 0; u < 64; ++u) {
    CHECK_FALSE(a.adjacent(u, u));
    for (Vertex v = 0; v < 64; ++v) CHECK(a.adjacent(u, v) == a.adjacent(v, u));
  }
}

TEST_CASE("sample_gnp follows the documented mt19937_64 threshold rule") {
  // Pair order (0,1),(0,2),(1,2); p = 1/4 means draw < 2^62.
  std::mt19937_64 rng(9);
  std::vector<bool> expected;
  for (int k = 0; k < 3; ++k) expected.push_back(rng() < (std::uint64_t{1} << 62));
  Graph g = sample_gnp({3, Rational(1, 4), 9});
  CHECK(g.adjacent(0, 1) == expected[0]);
  CHECK(g.adjacent(0, 2) == expected[1]);
  CHECK(g.adjacent(1, 2) == expected[2]);
}

TEST_CASE("sample_gnp edge count: mean over 10000 samples within 3 sd of 1485") {
  // Edge count is Binomial(4950, 3/10): variance 4950*0.3*0.7 = 1039.5 per
  // sample, so the sample mean has sd sqrt(1039.5/10000).
  const int samples = 10000;
  double sum = 0;
  for (int i = 0; i < samples; ++i) sum += static_cast<double>(sample_gnp({100, Rational(3, 10), 1000u + i}).num_edges());
  const double mean = sum / samples;
  const double sd = std::sqrt(4950 * 0.3 * 0.7 / samples);
  CHECK(std::fabs(mean - 1485.0) < 3 * sd);
}

TEST_CASE("graph_from_edges") {
  const Edge tri[] = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(graph_from_edges(3, tri) == Graph::complete(3));
  CHECK(graph_from_edges(4, std::span<const Edge>{}).num_edges() == 0);
  const Edge dup[] = {{0, 1}, {1, 0}, {0, 1}};
  CHECK(graph_from_edges(2, dup).num_edges() == 1);
  const Edge loop[] = {{0, 0}};
  CHECK_THROWS_AS(graph_from_edges(2, loop), DomainError);
  const Edge far[] = {{0, 4}};
  CHECK_THROWS_AS(graph_from_edges(3, far), DomainError);
}

TEST_CASE("is_clique_set") {
  Graph c5 = Graph::cycle(5);
  const Vertex e[] = {0, 1};
  const Vertex path[] = {0, 1, 2};
  CHECK(is_clique_set(c5, e));
  CHECK_FALSE(is_clique_set(c5, path));
  CHECK(is_clique_set(c5, std::span<const Vertex>{}));
  const Vertex single[] = {3};
  CHECK(is_clique_set(c5, single));
  const Vertex bad[] = {7};
  CHECK_THROWS_AS(is_clique_set(c5, bad), DomainError);
  Bitset b(5);
  b.set(2);
  b.set(3);
  CHECK(is_clique_set(c5, b));
  b.set(4);
  CHECK_FALSE(is_clique_set(c5, b));
}

TEST_CASE("DIMACS read/write") {
  CHECK(read_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n") == Graph::complete(3));
  CHECK(read_dimacs("c comment\nc another\np edge 4 0\n").num_vertices() == 4);
  CHECK_THROWS_AS(read_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(read_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(read_dimacs("p edge x y\n"), ParseError);
  CHECK_THROWS_AS(read_dimacs("p edge 3 1\ne 2 2\n"), ParseError);
  CHECK_THROWS_AS(read_dimacs("c nothing\n"), ParseError);
  CHECK(read_dimacs(write_dimacs(Graph::complete(3))) == Graph::complete(3));
}

TEST_CASE("DIMACS round trip on random graphs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Graph g = sample_gnp({1 + seed % 40, Rational(1 + seed % 7, 8), seed});
    CHECK(read_dimacs(write_dimacs(g)) == g);
  }
}

TEST_CASE("Petersen graph shape") {
  Graph p = Graph::petersen();
  CHECK(p.num_edges() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
}
