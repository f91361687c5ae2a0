#include "rgtc/clique.hpp"

#include <algorithm>
#include <numeric>

#include "rgtc/errors.hpp"

namespace rgtc {

namespace {

// Branch-and-bound over a relabelled copy of the induced subgraph. Local
// vertex i corresponds to original vertex order_[i].
class MaxCliqueSolver {
 public:
  MaxCliqueSolver(const Graph& g, const Bitset& allowed, SearchBudget budget) : budget_(budget) {
    order_ = allowed.indices();
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return g.neighbors(a).intersect_count(allowed) > g.neighbors(b).intersect_count(allowed);
    });
    const std::size_t m = order_.size();
    adj_.assign(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (g.adjacent(order_[i], order_[j])) {
          adj_[i].set(j);
          adj_[j].set(i);
        }
  }

  // Searches for a clique larger than `floor`; stops once one of size
  // >= target is found.
  CliqueReport run(std::size_t floor, std::size_t target) {
    best_size_ = floor;
    target_ = target;
    const std::size_t m = order_.size();
    if (m > 0 && best_size_ < target_) {
      std::vector<std::size_t> cur;
      expand(Bitset::full(m), cur);
    }
    CliqueReport rep;
    rep.omega = best_.size();
    for (auto i : best_) rep.witness.push_back(order_[i]);
    std::sort(rep.witness.begin(), rep.witness.end());
    return rep;
  }

 private:
  void expand(Bitset cand, std::vector<std::size_t>& cur) {
    if (budget_.max_nodes && ++nodes_ > budget_.max_nodes) throw BudgetExceeded("max-clique node budget exceeded");

    // Greedy sequential coloring; color classes give the pruning bound.
    std::vector<std::pair<std::size_t, std::size_t>> colored;
    colored.reserve(cand.count());
    Bitset uncolored = cand;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
        uncolored.reset(v);
        q.subtract(adj_[v]);
        colored.emplace_back(v, color);
      }
    }

    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      auto [v, c] = *it;
      if (cur.size() + c <= best_size_) return;
      cur.push_back(v);
      Bitset next = cand & adj_[v];
      if (next.none()) {
        if (cur.size() > best_size_) {
          best_size_ = cur.size();
          best_ = cur;
          if (best_size_ >= target_) done_ = true;
        }
      } else {
        expand(std::move(next), cur);
      }
      cur.pop_back();
      if (done_) return;
      cand.reset(v);
    }
  }

  SearchBudget budget_;
  std::uint64_t nodes_ = 0;
  VertexSet order_;
  std::vector<Bitset> adj_;
  std::size_t best_size_ = 0;
  std::size_t target_ = 0;
  bool done_ = false;
  std::vector<std::size_t> best_;
};

void bron_kerbosch(const Graph& g, VertexSet& r, Bitset p, Bitset x, const std::function<bool(const VertexSet&)>& visit,
                   std::uint64_t cap, std::uint64_t& emitted, bool& stop) {
  if (p.none()) {
    if (x.none()) {
      if (cap && emitted >= cap) throw BudgetExceeded("maximal-clique enumeration cap exceeded");
      ++emitted;
      VertexSet sorted = r;
      std::sort(sorted.begin(), sorted.end());
      if (!visit(sorted)) stop = true;
    }
    return;
  }
  // Pivot maximizing |P ∩ N(u)| over P ∪ X.
  Bitset px = p | x;
  std::size_t pivot = px.first();
  std::size_t best = p.intersect_count(g.neighbors(pivot));
  for (std::size_t u = px.next(pivot + 1); u < px.size(); u = px.next(u + 1)) {
    std::size_t c = p.intersect_count(g.neighbors(u));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  Bitset branch = p;
  branch.subtract(g.neighbors(pivot));
  for (std::size_t v = branch.first(); v < branch.size(); v = branch.next(v + 1)) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.neighbors(v), x & g.neighbors(v), visit, cap, emitted, stop);
    r.pop_back();
    if (stop) return;
    p.reset(v);
    x.set(v);
  }
}

void count_cliques(const Graph& g, Bitset cand, std::size_t depth, std::vector<std::uint64_t>& f) {
  for (std::size_t v = cand.first(); v < cand.size(); v = cand.first()) {
    cand.reset(v);
    if (f.size() <= depth + 1) f.resize(depth + 2, 0);
    ++f[depth + 1];
    Bitset next = cand & g.neighbors(v);
    if (next.any()) count_cliques(g, std::move(next), depth + 1, f);
  }
}

}  // namespace

CliqueReport max_clique_within(const Graph& g, const Bitset& allowed, SearchBudget budget) {
  MaxCliqueSolver solver(g, allowed, budget);
  return solver.run(0, allowed.count() + 1);
}

CliqueReport clique_number(const Graph& g, SearchBudget budget) {
  return max_clique_within(g, Bitset::full(g.num_vertices()), budget);
}

bool has_clique(const Graph& g, std::size_t k, SearchBudget budget) {
  if (k == 0) return true;
  if (k > g.num_vertices()) return false;
  MaxCliqueSolver solver(g, Bitset::full(g.num_vertices()), budget);
  return solver.run(k - 1, k).omega >= k;
}

void enumerate_maximal_cliques(const Graph& g, const std::function<bool(const VertexSet&)>& visit, std::uint64_t cap) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return;
  VertexSet r;
  std::uint64_t emitted = 0;
  bool stop = false;
  bron_kerbosch(g, r, Bitset::full(n), Bitset(n), visit, cap, emitted, stop);
}

std::vector<VertexSet> maximal_cliques(const Graph& g, std::uint64_t cap) {
  std::vector<VertexSet> out;
  enumerate_maximal_cliques(
      g,
      [&](const VertexSet& c) {
        out.push_back(c);
        return true;
      },
      cap);
  return out;
}

std::vector<BigInt> clique_f_vector(const Graph& g) {
  // Each clique is counted once, so every count is bounded by the number of
  // recursion nodes and fits in 64 bits.
  std::vector<std::uint64_t> f{1};
  count_cliques(g, Bitset::full(g.num_vertices()), 0, f);
  return {f.begin(), f.end()};
}

std::size_t greedy_color_bound(const Graph& g, const Bitset& candidates) {
  Bitset uncolored = candidates;
  std::size_t color = 0;
  while (uncolored.any()) {
    ++color;
    Bitset q = uncolored;
    for (std::size_t v = q.first(); v < q.size(); v = q.next(v + 1)) {
      uncolored.reset(v);
      q.subtract(g.neighbors(v));
    }
  }
  return color;
}

}  // namespace rgtc
