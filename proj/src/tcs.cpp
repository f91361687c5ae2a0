#include "rgtc/tcs.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "rgtc/clique.hpp"
#include "rgtc/errors.hpp"

namespace rgtc {

namespace {

Bitset to_bitset(std::size_t n, const VertexSet& s) {
  Bitset b(n);
  for (auto v : s) b.set(v);
  return b;
}

// Branch over non-decreasing index sequences into the size-sorted list of
// maximal cliques; the objective does not depend on the order of the parts.
class TcsSearch {
 public:
  TcsSearch(std::vector<VertexSet> cliques, std::size_t n, std::size_t s) : cliques_(std::move(cliques)), n_(n), s_(s) {
    std::stable_sort(cliques_.begin(), cliques_.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (const auto& c : cliques_) sets_.push_back(to_bitset(n, c));
  }

  void run(std::size_t incumbent, std::vector<std::size_t> incumbent_choice) {
    best_ = incumbent;
    best_choice_ = std::move(incumbent_choice);
    choice_.clear();
    dfs(0, 0, Bitset::full(n_));
  }

  std::size_t best() const { return best_; }
  std::vector<VertexSet> witness() const {
    std::vector<VertexSet> w;
    for (auto i : best_choice_) w.push_back(cliques_[i]);
    return w;
  }

 private:
  void dfs(std::size_t from, std::size_t sum, const Bitset& inter) {
    const std::size_t depth = choice_.size();
    if (depth == s_) {
      const std::size_t value = sum - inter.count();
      if (value > best_) {
        best_ = value;
        best_choice_ = choice_;
      }
      return;
    }
    for (std::size_t i = from; i < cliques_.size(); ++i) {
      // Remaining parts are no larger than clique i; the intersection is >= 0.
      if (sum + (s_ - depth) * cliques_[i].size() <= best_) return;
      choice_.push_back(i);
      dfs(i, sum + cliques_[i].size(), inter & sets_[i]);
      choice_.pop_back();
    }
  }

  std::vector<VertexSet> cliques_;
  std::vector<Bitset> sets_;
  std::size_t n_, s_;
  std::size_t best_ = 0;
  std::vector<std::size_t> choice_, best_choice_;
};

}  // namespace

std::size_t tcs_objective(std::size_t n, const std::vector<VertexSet>& parts) {
  if (parts.empty()) return 0;
  std::size_t sum = 0;
  Bitset inter = Bitset::full(n);
  for (const auto& p : parts) {
    sum += p.size();
    inter &= to_bitset(n, p);
  }
  return sum - inter.count();
}

TcsReport tcs_exact(const Graph& g, std::size_t s, std::uint64_t clique_cap) {
  if (s < 1) throw DomainError("s must be >= 1");
  if (g.num_vertices() < 1) throw DomainError("tcs requires n >= 1");
  TcsReport rep;
  auto cliques = maximal_cliques(g, clique_cap);
  std::size_t omega = 0;
  std::size_t omega_idx = 0;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (cliques[i].size() > omega) {
      omega = cliques[i].size();
      omega_idx = i;
    }
  rep.hdim = omega;
  if (s == 1) {
    // TC_1 is taken to be cat(K_Γ) = C(Γ).
    rep.value = omega;
    rep.witness = {cliques[omega_idx]};
    return rep;
  }
  TcsSearch search(std::move(cliques), g.num_vertices(), s);
  // All parts equal to one maximum clique gives (s-1) * omega; the sorted
  // list starts with a maximum clique.
  search.run((s - 1) * omega, std::vector<std::size_t>(s, 0));
  rep.value = search.best();
  rep.witness = search.witness();
  return rep;
}

std::size_t tcs_bruteforce(const Graph& g, std::size_t s) {
  const std::size_t n = g.num_vertices();
  if (n < 1 || n > kBruteForceMaxVertices)
    throw BudgetExceeded("tcs_bruteforce is limited to 1 <= n <= " + std::to_string(kBruteForceMaxVertices));
  if (s < 2 || s > kBruteForceMaxParts)
    throw BudgetExceeded("tcs_bruteforce is limited to 2 <= s <= " + std::to_string(kBruteForceMaxParts));

  // Every clique subset as a bitmask, empty set included.
  std::vector<std::uint32_t> cliques;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      if (mask >> u & 1u)
        for (std::size_t v = u + 1; v < n && ok; ++v)
          if ((mask >> v & 1u) && !g.adjacent(u, v)) ok = false;
    if (ok) cliques.push_back(mask);
  }

  std::size_t best = 0;
  std::vector<std::size_t> idx(s, 0);
  // Multisets i_1 <= ... <= i_s suffice: the objective is symmetric.
  std::function<void(std::size_t, std::size_t, int, std::uint32_t)> rec = [&](std::size_t depth, std::size_t from,
                                                                              int sum, std::uint32_t inter) {
    if (depth == s) {
      best = std::max(best, static_cast<std::size_t>(sum - std::popcount(inter)));
      return;
    }
    for (std::size_t i = from; i < cliques.size(); ++i)
      rec(depth + 1, i, sum + std::popcount(cliques[i]), inter & cliques[i]);
  };
  rec(0, 0, 0, (1u << n) - 1);
  return best;
}

TcsBounds tcs_bounds(const Graph& g, std::size_t s) {
  if (s < 1) throw DomainError("s must be >= 1");
  const std::size_t c = clique_number(g).omega;
  return {(s - 1) * c, s * c, c > 0 ? s * (c - 1) : 0};
}

}  // namespace rgtc
