#include "rgtc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "rgtc/analytic.hpp"
#include "rgtc/clique.hpp"
#include "rgtc/errors.hpp"
#include "rgtc/graph.hpp"
#include "rgtc/montecarlo.hpp"
#include "rgtc/multiclique.hpp"
#include "rgtc/tcs.hpp"

namespace rgtc {

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> es;
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1u) es.emplace_back(u, v);
  return graph_from_edges(n, es);
}

// Largest clique by scanning every vertex subset.
std::size_t naive_omega(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (m >> v & 1u) s.push_back(v);
    if (s.size() > best && is_clique_set(g, s)) best = s.size();
  }
  return best;
}

void check_graph_core() {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = sample_gnp({30, Rational(3, 10), seed});
    for (Vertex u = 0; u < 30; ++u) {
      expect(!g.adjacent(u, u), "self-loop in sampled graph");
      for (Vertex v = 0; v < 30; ++v) expect(g.adjacent(u, v) == g.adjacent(v, u), "asymmetric adjacency");
    }
    expect(g == sample_gnp({30, Rational(3, 10), seed}), "sample_gnp not deterministic");
    expect(read_dimacs(write_dimacs(g)) == g, "DIMACS round trip changed the graph");
  }
  expect(sample_gnp({7, 1, 5}).num_edges() == 21, "p=1 must give K_7");
  expect(sample_gnp({7, 0, 5}).num_edges() == 0, "p=0 must give the edgeless graph");
}

void check_clique_engine() {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto rep = clique_number(g);
      expect(rep.omega == naive_omega(g), "clique_number differs from exhaustive search");
      expect(is_clique_set(g, rep.witness) && rep.witness.size() == rep.omega, "invalid witness");
      auto f = clique_f_vector(g);
      expect(f.size() == rep.omega + 1, "f-vector length != omega + 1");
      for (std::size_t k = 0; k <= n + 1; ++k) expect(has_clique(g, k) == (k <= rep.omega), "has_clique mismatch");
    }
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + rng() % 13;
    Graph g = sample_gnp({n, Rational(1 + rng() % 9, 10), rng()});
    expect(clique_number(g).omega == naive_omega(g), "clique_number differs from exhaustive search (random)");
    for (const auto& c : maximal_cliques(g)) {
      expect(is_clique_set(g, c), "enumerated set is not a clique");
      Bitset common = Bitset::full(n);
      for (auto v : c) common &= g.neighbors(v);
      expect(common.none(), "enumerated clique is not maximal");
    }
  }
}

void check_multiclique() {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 3 + rng() % 5;
    Graph g = sample_gnp({n, Rational(1 + rng() % 9, 10), rng()});
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t r = 1; r * s <= n; ++r) {
        BigInt cnt = count_multicliques(g, s, r);
        expect(cnt % factorial(static_cast<unsigned>(s)) == 0, "count not divisible by s!");
        auto found = find_multiclique(g, s, r, Strategy::Exact);
        expect(found.witness.has_value() == (cnt > 0), "find/count disagree");
        if (found.witness) expect(is_valid_multiclique(g, *found.witness, s), "invalid multi-clique witness");
        auto greedy = find_multiclique(g, s, r, Strategy::Greedy);
        if (greedy.witness) expect(is_valid_multiclique(g, *greedy.witness, s), "invalid greedy witness");
      }
  }
}

// E(X^2)/E(X)^2 by enumerating every graph on n vertices.
Rational brute_moment_ratio(std::size_t n, const Rational& p, std::size_t r, std::size_t s) {
  const std::size_t pairs = n * (n - 1) / 2;
  Rational m1 = 0, m2 = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = graph_from_mask(n, mask);
    const auto e = static_cast<unsigned>(g.num_edges());
    Rational w = pow(p, e) * pow(1 - p, static_cast<unsigned>(pairs) - e);
    Rational x(count_multicliques(g, s, r));
    m1 += w * x;
    m2 += w * x * x;
  }
  return m2 / (m1 * m1);
}

void check_analytic() {
  expect(second_moment_ratio(4, Rational(1, 2), 2, 2).exact() == 2, "second moment ratio at n=4 must be 2");
  expect(second_moment_ratio(5, Rational(1, 2), 2, 2).exact() == brute_moment_ratio(5, Rational(1, 2), 2, 2),
         "second moment identity fails at n=5");
  for (std::size_t s = 1; s <= 3; ++s)
    for (std::size_t r = 1; r <= 3; ++r)
      for (std::uint64_t n = s * r; n <= 10; ++n)
        expect(sum_F_over_D(n, r, s).exact() == 1, "sum of F_A over D is not 1");
  const Rational p(1, 2);
  for (std::size_t r = 1; r <= 3; ++r)
    enumerate_D(2, r, [&](const IntersectionMatrix& a) {
      const std::size_t sigma[] = {1, 0};
      expect(weight_T(12, p, r, 2, a).exact() == weight_T(12, p, r, 2, a.permute_columns(sigma)).exact(),
             "T_A not invariant under column permutation");
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
          if (a.row_sum(i) + 1 > r || a.col_sum(j) + 1 > r) continue;
          Scalar t = weight_T(12, p, r, 2, a);
          if (t.is_zero()) continue;
          Scalar t1 = weight_T(12, p, r, 2, a.incremented(i, j));
          expect(increment_ratio(12, p, r, 2, a, i, j).exact() == (t1 / t).exact(), "increment ratio mismatch");
          Scalar lg = increment_ratio(12, p, r, 2, a, i, j, Mode::Log);
          expect(std::fabs(lg.to_long_double() / (t1 / t).to_long_double() - 1) < 1e-10, "log/exact mismatch");
        }
      return true;
    });
}

void check_tcs() {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      Graph g = graph_from_mask(n, mask);
      const std::size_t c = clique_number(g).omega;
      for (std::size_t s = 2; s <= 3; ++s) {
        auto rep = tcs_exact(g, s);
        expect(rep.value == tcs_bruteforce(g, s), "tcs_exact differs from brute force");
        expect(rep.value == tcs_objective(n, rep.witness), "TC_s witness does not attain the value");
        expect((s - 1) * c <= rep.value && rep.value <= s * c, "sandwich (s-1)C <= TC_s <= sC violated");
      }
    }
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t s = 2; s <= 4; ++s) expect(tcs_exact(Graph::complete(m), s).value == (s - 1) * m, "torus value");
}

void check_montecarlo() {
  ExperimentConfig c;
  c.kind = ExperimentKind::Expectation;
  c.n = 4;
  c.s = 2;
  c.r_override = 2;
  auto res = estimate_expectation(c);
  expect(res.summary.exhaustive && res.summary.exact_mean == Rational(3, 2), "exhaustive E(X) at n=4 must be 3/2");
  ExperimentConfig w;
  w.kind = ExperimentKind::Window;
  w.n = 40;
  w.samples = 6;
  w.master_seed = 3;
  auto a = run_window(w);
  w.thread_hint = 3;
  auto b = run_window(w);
  expect(records_csv(w, a.records) == records_csv(w, b.records), "CSV depends on thread count");
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::function<void(const CheckResult&)>& on_result) {
  const std::vector<std::pair<std::string, std::function<void()>>> checks = {
      {"graph-core: symmetry, determinism, DIMACS round trip", check_graph_core},
      {"clique-engine: exhaustive oracle, f-vector, maximality", check_clique_engine},
      {"multiclique: divisibility, find/count agreement", check_multiclique},
      {"analytic: moment identity, sum F = 1, ratios, permutations", check_analytic},
      {"tcs: brute-force equality, sandwich, torus", check_tcs},
      {"montecarlo: exhaustive expectation, reproducibility", check_montecarlo},
  };
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : checks) {
    CheckResult r{name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      fn();
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace rgtc
