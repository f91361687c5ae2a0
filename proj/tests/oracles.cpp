#include "oracles.hpp"

#include <bit>
#include <functional>

namespace oracle {

std::size_t num_pairs(std::size_t n) { return n * (n - 1) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<rgtc::Edge> es;
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1u) es.emplace_back(u, v);
  return rgtc::graph_from_edges(n, es);
}

bool is_clique_mask(const Graph& g, std::uint32_t mask) {
  const std::size_t n = g.num_vertices();
  for (std::size_t u = 0; u < n; ++u)
    if (mask >> u & 1u)
      for (std::size_t v = u + 1; v < n; ++v)
        if ((mask >> v & 1u) && !g.adjacent(u, v)) return false;
  return true;
}

std::vector<std::uint32_t> clique_masks(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << g.num_vertices()); ++m)
    if (is_clique_mask(g, m)) out.push_back(m);
  return out;
}

std::size_t omega(const Graph& g) {
  std::size_t best = 0;
  for (auto m : clique_masks(g)) best = std::max<std::size_t>(best, std::popcount(m));
  return best;
}

std::vector<std::uint64_t> f_vector(const Graph& g) {
  std::vector<std::uint64_t> f(omega(g) + 1, 0);
  for (auto m : clique_masks(g)) ++f[std::popcount(m)];
  return f;
}

std::vector<std::uint32_t> maximal_clique_masks(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> out;
  for (auto m : clique_masks(g)) {
    if (m == 0) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!(m >> v & 1u) && is_clique_mask(g, m | (1u << v))) maximal = false;
    if (maximal) out.push_back(m);
  }
  return out;
}

std::uint64_t ordered_multicliques(const Graph& g, std::size_t s, std::size_t r) {
  std::vector<std::uint32_t> parts;
  for (auto m : clique_masks(g))
    if (static_cast<std::size_t>(std::popcount(m)) == r) parts.push_back(m);
  std::uint64_t count = 0;
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t depth, std::uint32_t used) {
    if (depth == s) {
      ++count;
      return;
    }
    for (auto m : parts)
      if (!(m & used)) rec(depth + 1, used | m);
  };
  rec(0, 0);
  return count;
}

Moments exhaustive_moments(std::size_t n, const Rational& p, std::size_t s, std::size_t r) {
  const std::size_t pairs = num_pairs(n);
  Moments mo{0, 0};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = graph_from_mask(n, mask);
    const auto e = static_cast<unsigned>(std::popcount(mask));
    Rational w = rgtc::pow(p, e) * rgtc::pow(1 - p, static_cast<unsigned>(pairs) - e);
    Rational x(ordered_multicliques(g, s, r));
    mo.first += w * x;
    mo.second += w * x * x;
  }
  return mo;
}

std::vector<std::vector<unsigned>> brute_D(std::size_t s, std::size_t r) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> a(s * s, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == s * s) {
      for (std::size_t i = 0; i < s; ++i) {
        unsigned row = 0, col = 0;
        for (std::size_t j = 0; j < s; ++j) {
          row += a[i * s + j];
          col += a[j * s + i];
        }
        if (row > r || col > r) return;
      }
      out.push_back(a);
      return;
    }
    for (unsigned v = 0; v <= r; ++v) {
      a[pos] = v;
      rec(pos + 1);
    }
    a[pos] = 0;
  };
  rec(0);
  return out;
}

std::map<std::vector<unsigned>, Rational> intersection_type_frequencies(std::size_t n, std::size_t s, std::size_t r) {
  std::vector<std::uint32_t> rsets;
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == r) rsets.push_back(m);
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
    if (cur.size() == s) {
      tuples.push_back(cur);
      return;
    }
    for (auto m : rsets)
      if (!(m & used)) {
        cur.push_back(m);
        rec(used | m);
        cur.pop_back();
      }
  };
  rec(0);
  std::map<std::vector<unsigned>, std::uint64_t> counts;
  for (const auto& w : tuples)
    for (const auto& w2 : tuples) {
      std::vector<unsigned> a(s * s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i * s + j] = static_cast<unsigned>(std::popcount(w[i] & w2[j]));
      ++counts[a];
    }
  const Rational total = Rational(tuples.size()) * Rational(tuples.size());
  std::map<std::vector<unsigned>, Rational> freq;
  for (const auto& [a, c] : counts) freq[a] = Rational(c) / total;
  return freq;
}

}  // namespace oracle
