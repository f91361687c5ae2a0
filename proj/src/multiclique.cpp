#include "rgtc/multiclique.hpp"

#include <algorithm>

#include "rgtc/clique.hpp"
#include "rgtc/errors.hpp"

namespace rgtc {

Strategy parse_strategy(std::string_view s) {
  if (s == "exact") return Strategy::Exact;
  if (s == "greedy") return Strategy::Greedy;
  throw DomainError("unknown strategy '" + std::string(s) + "' (expected exact|greedy)");
}

std::string_view to_string(Strategy s) { return s == Strategy::Exact ? "exact" : "greedy"; }

namespace {

// Enumerates unordered part-sets: parts are generated in increasing order of
// their minimum vertex, and vertices inside a part in increasing order.
class ExactSearch {
 public:
  ExactSearch(const Graph& g, std::size_t s, std::size_t r, MultiCliqueBudget budget, bool stop_at_first)
      : g_(g), s_(s), r_(r), budget_(budget), stop_at_first_(stop_at_first) {}

  void run() {
    Bitset residual = Bitset::full(g_.num_vertices());
    parts_.clear();
    search_part(residual, 0);
  }

  const BigInt& unordered_count() const { return count_; }
  const std::optional<MultiClique>& witness() const { return witness_; }

 private:
  void tick() {
    if (budget_.max_nodes && ++nodes_ > budget_.max_nodes) throw BudgetExceeded("multi-clique node budget exceeded");
  }

  void search_part(const Bitset& residual, std::size_t min_from) {
    if (parts_.size() == s_) {
      ++count_;
      if (!witness_) witness_ = MultiClique{r_, parts_};
      if (stop_at_first_) done_ = true;
      return;
    }
    tick();
    const std::size_t remaining = s_ - parts_.size();
    Bitset avail = residual;
    for (std::size_t v = 0; v < min_from; ++v) avail.reset(v);
    if (avail.count() < remaining * r_) return;
    if (greedy_color_bound(g_, avail) < r_) return;

    for (std::size_t v = avail.first(); v < avail.size(); v = avail.next(v + 1)) {
      // Every later part lies inside avail ∩ [v, n).
      Bitset tail = avail;
      for (std::size_t u = avail.first(); u < v; u = avail.next(u + 1)) tail.reset(u);
      if (tail.count() < remaining * r_) break;

      Bitset cand = tail & g_.neighbors(v);
      current_.assign(1, v);
      extend(residual, cand, v);
      if (done_) return;
    }
  }

  void extend(const Bitset& residual, Bitset cand, std::size_t min_vertex) {
    if (current_.size() == r_) {
      Bitset next_residual = residual;
      for (auto u : current_) next_residual.reset(u);
      VertexSet part = current_;
      parts_.push_back(part);
      search_part(next_residual, min_vertex + 1);
      parts_.pop_back();
      current_ = std::move(part);
      return;
    }
    tick();
    if (current_.size() + greedy_color_bound(g_, cand) < r_) return;
    for (std::size_t u = cand.first(); u < cand.size(); u = cand.next(u + 1)) {
      Bitset next = cand & g_.neighbors(u);
      for (std::size_t w = next.first(); w < next.size() && w <= u; w = next.next(w + 1)) next.reset(w);
      current_.push_back(u);
      extend(residual, std::move(next), min_vertex);
      current_.pop_back();
      if (done_) return;
    }
  }

  const Graph& g_;
  std::size_t s_, r_;
  MultiCliqueBudget budget_;
  bool stop_at_first_;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
  BigInt count_ = 0;
  std::vector<VertexSet> parts_;
  VertexSet current_;
  std::optional<MultiClique> witness_;
};

void check_parts(std::size_t s) {
  if (s < 1) throw DomainError("number of parts s must be >= 1");
}

}  // namespace

MultiCliqueResult find_multiclique(const Graph& g, std::size_t s, std::size_t r, Strategy strategy,
                                   MultiCliqueBudget budget) {
  check_parts(s);
  MultiCliqueResult res;
  if (s * r > g.num_vertices()) return res;
  if (r == 0) {
    res.witness = MultiClique{0, std::vector<VertexSet>(s)};
    return res;
  }
  if (strategy == Strategy::Exact) {
    ExactSearch search(g, s, r, budget, true);
    search.run();
    res.witness = search.witness();
    return res;
  }

  Bitset residual = Bitset::full(g.num_vertices());
  MultiClique mc{r, {}};
  for (std::size_t k = 0; k < s; ++k) {
    CliqueReport rep = max_clique_within(g, residual, SearchBudget{budget.max_nodes});
    if (rep.omega < r) {
      res.conclusive = false;
      return res;
    }
    VertexSet part(rep.witness.begin(), rep.witness.begin() + static_cast<std::ptrdiff_t>(r));
    for (auto v : part) residual.reset(v);
    mc.parts.push_back(std::move(part));
  }
  res.witness = std::move(mc);
  return res;
}

BigInt count_multicliques(const Graph& g, std::size_t s, std::size_t r, MultiCliqueBudget budget) {
  check_parts(s);
  if (s * r > g.num_vertices()) return 0;
  if (r == 0) return 1;
  ExactSearch search(g, s, r, budget, false);
  search.run();
  return search.unordered_count() * factorial(static_cast<unsigned>(s));
}

bool is_valid_multiclique(const Graph& g, const MultiClique& mc, std::size_t s) {
  if (mc.parts.size() != s) return false;
  Bitset used(g.num_vertices());
  for (const auto& part : mc.parts) {
    if (part.size() != mc.r) return false;
    for (auto v : part) {
      if (v >= g.num_vertices() || used.test(v)) return false;
      used.set(v);
    }
    if (!is_clique_set(g, part)) return false;
  }
  return true;
}

std::vector<std::size_t> greedy_peel_sizes(const Graph& g, std::size_t s) {
  check_parts(s);
  Bitset residual = Bitset::full(g.num_vertices());
  std::vector<std::size_t> sizes;
  for (std::size_t k = 0; k < s; ++k) {
    CliqueReport rep = max_clique_within(g, residual);
    sizes.push_back(rep.omega);
    for (auto v : rep.witness) residual.reset(v);
  }
  return sizes;
}

}  // namespace rgtc
