// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "oracles.hpp"
#include "rgtc/analytic.hpp"
#include "rgtc/cli.hpp"
#include "rgtc/clique.hpp"
#include "rgtc/errors.hpp"
#include "rgtc/montecarlo.hpp"
#include "rgtc/multiclique.hpp"
#include "rgtc/tcs.hpp"

using namespace rgtc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit_seconds) {
    o.ok = false;
    o.detail += " [runtime " + std::to_string(secs) + " s over limit]";
  }
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << name << "  (" << std::fixed
            << std::setprecision(2) << secs << " s)  " << o.detail << std::endl;
}

std::vector<IntersectionMatrix> all_D(std::size_t s, std::size_t r) {
  std::vector<IntersectionMatrix> out;
  enumerate_D(s, r, [&](const IntersectionMatrix& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

double greedy_fraction(std::uint64_t n) {
  ExperimentConfig c;
  c.kind = ExperimentKind::MultiClique;
  c.n = n;
  c.s = 3;
  c.samples = 10;
  c.master_seed = 20240601;
  c.strategy = Strategy::Greedy;
  return run_multiclique(c).summary.probability.value;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"rgtc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace

int main() {
  const Rational half(1, 2);

  criterion(1, "exact second-moment identity", 60, [&] {
    struct Case {
      std::size_t n, s, r;
      Rational p;
    };
    Outcome o;
    for (const Case& c : {Case{4, 2, 2, half}, Case{5, 2, 2, half}, Case{6, 2, 2, Rational(1, 3)}}) {
      const auto m = oracle::exhaustive_moments(c.n, c.p, c.s, c.r);
      const Rational want = m.second / (m.first * m.first);
      const Rational got = second_moment_ratio(c.n, c.p, c.r, c.s, Mode::Exact).exact();
      o.detail += "n=" + std::to_string(c.n) + ": " + to_string(got) + "; ";
      if (got != want) o.ok = false;
    }
    if (second_moment_ratio(4, half, 2, 2).exact() != 2) o.ok = false;
    return o;
  });

  criterion(2, "sum of F_A over D equals 1", 60, [&] {
    int cases = 0;
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t r = 1; r <= 3; ++r)
        for (std::size_t n = std::max<std::size_t>(2, s * r); n <= 12; ++n) {
          ++cases;
          if (sum_F_over_D(n, r, s).exact() != 1)
            return Outcome{false, "n=" + std::to_string(n) + " s=" + std::to_string(s) + " r=" + std::to_string(r)};
        }
    return Outcome{true, std::to_string(cases) + " parameter triples"};
  });

  criterion(3, "increment and convexity ratio identities", 60, [&] {
    int inc = 0, conv = 0;
    const Rational p = half;
    for (std::uint64_t n : {12u, 20u, 50u})
      for (std::size_t r = 1; r <= 3; ++r)
        for (const auto& a : all_D(2, r))
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
              if (a.row_sum(i) >= r || a.col_sum(j) >= r) continue;
              const Scalar t = weight_T(n, p, r, 2, a);
              const Scalar t1 = weight_T(n, p, r, 2, a.incremented(i, j));
              if (!t.is_zero() && !t1.is_zero()) {
                ++inc;
                if (increment_ratio(n, p, r, 2, a, i, j).exact() != (t1 / t).exact())
                  return Outcome{false, "increment mismatch at n=" + std::to_string(n) + " A=" + a.str()};
              }
              if (a.row_sum(i) + 2 > r || a.col_sum(j) + 2 > r) continue;
              const Scalar t2 = weight_T(n, p, r, 2, a.incremented(i, j, 2));
              if (!t.is_zero() && !t2.is_zero()) {
                ++conv;
                if (convexity_ratio(n, p, r, 2, a, i, j).exact() != (t2 * t / (t1 * t1)).exact())
                  return Outcome{false, "convexity mismatch at n=" + std::to_string(n) + " A=" + a.str()};
              }
            }
    return Outcome{true, std::to_string(inc) + " increment and " + std::to_string(conv) + " convexity cases"};
  });

  criterion(4, "TC_s equals the exhaustive oracle", 300, [&] {
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      const Graph g = oracle::graph_from_mask(5, mask);
      for (std::size_t s = 2; s <= 3; ++s)
        if (tcs_exact(g, s).value != tcs_bruteforce(g, s))
          return Outcome{false, "n=5 mask=" + std::to_string(mask) + " s=" + std::to_string(s)};
    }
    std::mt19937_64 rng(404);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 6 + rng() % 3, s = 2 + rng() % 2;
      const Graph g = sample_gnp({n, half, rng()});
      if (tcs_exact(g, s).value != tcs_bruteforce(g, s)) return Outcome{false, "random trial " + std::to_string(t)};
    }
    for (std::size_t m = 1; m <= 6; ++m)
      for (std::size_t s = 2; s <= 4; ++s)
        if (tcs_exact(Graph::complete(m), s).value != (s - 1) * m) return Outcome{false, "K_" + std::to_string(m)};
    for (std::size_t n = 2; n <= 6; ++n)
      for (std::size_t s = 2; s <= n; ++s)
        if (tcs_exact(Graph(n), s).value != s) return Outcome{false, "edgeless n=" + std::to_string(n)};
    return Outcome{true, "1024 + 500 graphs, complete and edgeless families"};
  });

  criterion(5, "deterministic sandwich (s-1)C <= TC_s <= sC", 300, [&] {
    std::mt19937_64 rng(505);
    for (int t = 0; t < 1000; ++t) {
      const std::size_t n = 1 + rng() % 20, s = 2 + rng() % 2;
      const Graph g = sample_gnp({n, Rational(1 + rng() % 9, 10), rng()});
      const std::size_t c = clique_number(g).omega, v = tcs_exact(g, s).value;
      if (v < (s - 1) * c || v > s * c) return Outcome{false, "violation at trial " + std::to_string(t)};
    }
    return Outcome{true, "0 violations in 1000 graphs"};
  });

  criterion(6, "multi-clique implies TC_s >= s r", 300, [&] {
    std::mt19937_64 rng(606);
    int found = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 4 + rng() % 17, s = 2 + rng() % 2, r = 1 + rng() % 3;
      const Graph g = sample_gnp({n, half, rng()});
      if (!find_multiclique(g, s, r, Strategy::Exact).witness) continue;
      ++found;
      if (tcs_exact(g, s).value < s * r) return Outcome{false, "violation at trial " + std::to_string(t)};
    }
    return Outcome{true, "0 violations, " + std::to_string(found) + " of 200 trials had a multi-clique"};
  });

  criterion(7, "expectation of X_{r,s}", 300, [&] {
    ExperimentConfig c;
    c.kind = ExperimentKind::Expectation;
    c.n = 10;
    c.s = 2;
    c.r_override = 3;
    c.samples = 2000;
    c.master_seed = 707;
    const double mean = estimate_expectation(c).summary.mean.value;
    ExperimentConfig e = c;
    e.n = 4;
    e.r_override = 2;
    const auto ex = estimate_expectation(e).summary;
    Outcome o;
    o.ok = std::fabs(mean - 65.625) <= 0.10 * 65.625 && ex.exhaustive && ex.exact_mean == Rational(3, 2);
    std::ostringstream d;
    d << "sample mean " << mean << " vs 65.625; exhaustive n=4 mean " << (ex.exact_mean ? to_string(*ex.exact_mean) : "-");
    o.detail = d.str();
    return o;
  });

  criterion(8, "ordered multi-clique counts divisible by s!", 300, [&] {
    std::mt19937_64 rng(808);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 4 + rng() % 13, s = 2 + rng() % 2, r = 1 + rng() % 3;
      const Graph g = sample_gnp({n, Rational(1 + rng() % 4, 5), rng()});
      if (count_multicliques(g, s, r) % factorial(s) != 0) return Outcome{false, "trial " + std::to_string(t)};
    }
    return Outcome{true, "500 instances"};
  });

  criterion(9, "clique number window at n=256", 1800, [&] {
    ExperimentConfig c;
    c.kind = ExperimentKind::Window;
    c.n = 256;
    c.samples = 30;
    c.master_seed = 909;
    const auto s = run_window(c).summary;
    std::ostringstream d;
    d << "window [" << *s.window_lo << "," << *s.window_hi << "], probability " << s.probability.value;
    return Outcome{*s.window_lo == 11 && *s.window_hi == 12 && s.probability.value >= 0.8, d.str()};
  });

  criterion(10, "greedy multi-clique trend over n in {128,256,512}", 3600, [&] {
    const double f[3] = {greedy_fraction(128), greedy_fraction(256), greedy_fraction(512)};
    int inversions = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) inversions += f[a] > f[b];
    std::ostringstream d;
    d << "fractions " << f[0] << ", " << f[1] << ", " << f[2] << "; inversions " << inversions;
    return Outcome{inversions <= 1, d.str()};
  });

  criterion(11, "finite-n diagnostics", 60, [&] {
    const auto t = t_zero_check(1000, half, 2, 2);
    const long double t0 = t.t0.to_long_double();
    const long double c = stirling_c(100, 1, 4), lm = lambda_max(2, half);
    const BigInt d = d_size(2, 2);
    const bool ok = t.holds && std::fabs(t0 - 0.98406L) <= 1e-4L && std::fabs(t.bound - 0.98395L) <= 1e-4L &&
                    std::fabs(c - 0.36772L) <= 1e-4L && std::fabs(lm - 0.043964L) <= 1e-6L && d == 26 &&
                    all_D(2, 2).size() == 26;
    std::ostringstream o;
    o << std::setprecision(6) << "t0 " << static_cast<double>(t0) << " >= bound " << static_cast<double>(t.bound)
      << "; c " << static_cast<double>(c) << "; lambda_max " << static_cast<double>(lm) << "; |D(2,2)| " << d;
    return Outcome{ok, o.str()};
  });

  criterion(12, "mc CSV is byte-identical across thread counts", 600, [&] {
    const fs::path dir = fs::temp_directory_path() / ("rgtc_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::string>> runs{
        {"window", "n = 128\np = 1/2\neps = 1/2\nsamples = 16\nseed = 1212\n"},
        {"multiclique", "n = 128\np = 1/2\neps = 1/2\ns = 3\nsamples = 8\nseed = 1213\nstrategy = greedy\n"},
        {"tcs", "n = 20\np = 1/2\neps = 1/2\ns = 2\nsamples = 20\nseed = 1214\n"},
        {"expect", "n = 10\np = 1/2\ns = 2\nr = 3\nsamples = 200\nseed = 1215\n"}};
    Outcome o{true, ""};
    for (const auto& [kind, body] : runs) {
      const fs::path cfg = dir / (kind + ".cfg");
      std::ofstream(cfg) << body;
      const fs::path a = dir / (kind + "_1.csv"), b = dir / (kind + "_4.csv");
      const int ra = cli({"mc", kind, "--config", cfg.string(), "--csv", a.string(), "--threads", "1"});
      const int rb = cli({"mc", kind, "--config", cfg.string(), "--csv", b.string(), "--threads", "4"});
      const bool same = ra == 0 && rb == 0 && slurp(a) == slurp(b) && !slurp(a).empty();
      o.detail += kind + (same ? " identical; " : " DIFFERS; ");
      o.ok = o.ok && same;
    }
    fs::remove_all(dir);
    return o;
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
