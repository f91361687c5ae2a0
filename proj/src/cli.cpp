#include "rgtc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "rgtc/analytic.hpp"
#include "rgtc/clique.hpp"
#include "rgtc/errors.hpp"
#include "rgtc/graph.hpp"
#include "rgtc/montecarlo.hpp"
#include "rgtc/multiclique.hpp"
#include "rgtc/tcs.hpp"
#include "rgtc/verify.hpp"

namespace rgtc {

namespace {

std::string fixed(long double x, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", digits, x);
  return buf;
}

std::string show(const Scalar& x) {
  if (!x.is_exact() || boost::multiprecision::denominator(x.exact()) == 1) return x.str();
  return x.str() + "  (~" + Scalar(x).as(Mode::Log).str() + ")";
}

void write_text(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw DomainError("cannot write " + *path);
  f << text;
}

struct AnalyticArgs {
  std::string quantity;
  std::uint64_t n = 0;
  std::string p = "1/2";
  std::string eps = "1/2";
  std::size_t s = 1;
  std::optional<std::size_t> r;
  std::size_t m = 1;
  std::size_t k = 0;
  std::string mode = "exact";
  std::optional<std::string> lambda;
  std::optional<std::size_t> a;
  std::uint64_t cap = kDefaultDCap;
};

void run_analytic(const AnalyticArgs& args, std::ostream& out) {
  const Rational p = parse_rational(args.p);
  const long double eps = to_long_double(parse_decimal(args.eps));
  const Mode mode = parse_mode(args.mode);
  auto r = [&] { return args.r ? *args.r : clique_target_r(args.n, p, eps); };
  auto lambda = [&] {
    return args.lambda ? to_long_double(parse_decimal(*args.lambda)) : lambda_max(args.s, p) / 2;
  };
  const std::string& q = args.quantity;
  if (q == "z") {
    out << fixed(z_value(args.n, p)) << '\n';
  } else if (q == "r") {
    out << clique_target_r(args.n, p, eps) << '\n';
  } else if (q == "expect") {
    out << show(expected_multicliques(args.n, p, r(), args.s, mode)) << '\n';
  } else if (q == "ratio") {
    out << show(second_moment_ratio(args.n, p, r(), args.s, mode, args.cap)) << '\n';
  } else if (q == "sumF") {
    out << show(sum_F_over_D(args.n, r(), args.s, mode, args.cap)) << '\n';
  } else if (q == "dsize") {
    out << d_size(args.s, r()).str() << '\n';
  } else if (q == "lambda") {
    out << fixed(lambda_max(args.s, p), 12) << '\n';
    if (args.a) out << to_string(classify_entry(*args.a, args.n, p, lambda(), r(), args.s)) << '\n';
  } else if (q == "stirling") {
    out << fixed(stirling_c(args.n, args.m, r()), 12) << '\n';
  } else if (q == "mainine") {
    out << show(mainine_term(args.n, p, r(), args.k, args.m, mode)) << '\n';
  } else if (q == "t0") {
    auto res = t_zero_check(args.n, p, r(), args.s, mode);
    out << "t0 = " << show(res.t0) << "\nbound = " << fixed(res.bound, 12) << "\nholds = " << (res.holds ? "true" : "false")
        << '\n';
  } else if (q == "dominance") {
    auto res = dominance_check(args.n, p, r(), args.s, lambda(), mode, args.cap);
    out << "holds = " << (res.holds ? "true" : "false") << "\nbound = " << res.bound.str() << " at "
        << (res.bound_at ? res.bound_at->str() : "-") << "\nworst = " << res.worst.str() << " at "
        << (res.worst_at ? res.worst_at->str() : "-") << '\n';
  } else {
    throw DomainError("unknown analytic quantity '" + q + "'");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random-graph clique, multi-clique and sequential topological complexity workbench"};
  app.require_subcommand(1);

  // gen
  std::uint64_t gen_n = 0, gen_seed = 0;
  std::string gen_p;
  std::optional<std::string> gen_out;
  auto* gen = app.add_subcommand("gen", "Sample G(n,p) and write it in DIMACS format");
  gen->add_option("--n", gen_n, "Vertex count")->required();
  gen->add_option("--p", gen_p, "Edge probability a/b")->required();
  gen->add_option("--seed", gen_seed, "64-bit seed")->required();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // clique
  std::string clique_in;
  std::optional<std::size_t> clique_k;
  bool clique_f = false;
  std::uint64_t clique_budget = 0;
  auto* clique = app.add_subcommand("clique", "Clique number, k-clique test, f-vector");
  clique->add_option("--in", clique_in, "DIMACS file")->required();
  clique->add_option("--k", clique_k, "Test for a k-clique");
  clique->add_flag("--f-vector", clique_f, "Print clique counts by size");
  clique->add_option("--budget", clique_budget, "Node budget (0 = unlimited)");

  // multiclique
  std::string mc_in, mc_strategy = "exact";
  std::size_t mc_s = 1, mc_r = 0;
  std::uint64_t mc_budget = 0;
  bool mc_count = false;
  auto* multi = app.add_subcommand("multiclique", "Search for an s-th multi-clique of size r");
  multi->add_option("--in", mc_in, "DIMACS file")->required();
  multi->add_option("--s", mc_s, "Number of parts")->required();
  multi->add_option("--r", mc_r, "Part size")->required();
  multi->add_option("--strategy", mc_strategy, "exact|greedy");
  multi->add_flag("--count", mc_count, "Also count ordered multi-cliques");
  multi->add_option("--budget", mc_budget, "Node budget (0 = unlimited)");

  // tcs
  std::string tcs_in;
  std::size_t tcs_s = 2;
  bool tcs_brute = false;
  std::uint64_t tcs_cap = kDefaultMaximalCliqueCap;
  auto* tcs = app.add_subcommand("tcs", "Exact TC_s of the right-angled Artin complex");
  tcs->add_option("--in", tcs_in, "DIMACS file")->required();
  tcs->add_option("--s", tcs_s, "Sequential index s")->required();
  tcs->add_flag("--brute", tcs_brute, "Also run the exhaustive oracle (n <= 8)");
  tcs->add_option("--cap", tcs_cap, "Maximal-clique enumeration cap");

  // analytic
  AnalyticArgs an;
  auto* analytic = app.add_subcommand("analytic", "Closed-form second-moment quantities");
  analytic->add_option("quantity", an.quantity, "z|r|expect|ratio|sumF|dsize|lambda|stirling|mainine|t0|dominance")
      ->required()
      ->check(CLI::IsMember({"z", "r", "expect", "ratio", "sumF", "dsize", "lambda", "stirling", "mainine", "t0",
                             "dominance"}));
  analytic->add_option("--n", an.n, "Vertex count");
  analytic->add_option("--p", an.p, "Edge probability a/b");
  analytic->add_option("--eps", an.eps, "Resolution epsilon");
  analytic->add_option("--s", an.s, "Number of parts");
  analytic->add_option("--r", an.r, "Clique size (default floor(z - eps))");
  analytic->add_option("--m", an.m, "Multiplicity m");
  analytic->add_option("--k", an.k, "Power k");
  analytic->add_option("--mode", an.mode, "exact|log");
  analytic->add_option("--lambda", an.lambda, "Partition parameter (default lambda_max/2)");
  analytic->add_option("--a", an.a, "Entry to classify (with 'lambda')");
  analytic->add_option("--cap", an.cap, "Cap on |D|");

  // mc
  std::string mc_kind, mc_config;
  std::optional<std::string> mc_csv, mc_summary;
  std::optional<unsigned> mc_threads;
  auto* mc = app.add_subcommand("mc", "Monte Carlo experiments");
  mc->add_option("kind", mc_kind, "window|multiclique|tcs|expect")
      ->required()
      ->check(CLI::IsMember({"window", "multiclique", "tcs", "expect"}));
  mc->add_option("--config", mc_config, "key = value config file")->required();
  mc->add_option("--csv", mc_csv, "Per-sample CSV output (default stdout)");
  mc->add_option("--summary", mc_summary, "Write the JSON summary to a file");
  mc->add_option("--threads", mc_threads, "Worker threads");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*gen) {
      Graph g = sample_gnp({gen_n, parse_rational(gen_p), gen_seed});
      write_text("c G(" + std::to_string(gen_n) + "," + gen_p + ") seed " + std::to_string(gen_seed) + "\n" +
                     write_dimacs(g),
                 gen_out, out);
    } else if (*clique) {
      Graph g = load_dimacs_file(clique_in);
      auto rep = clique_number(g, SearchBudget{clique_budget});
      out << "omega: " << rep.omega << "\nwitness: " << format_vertex_set(rep.witness) << '\n';
      if (clique_k) out << "has_clique(" << *clique_k << "): " << (rep.omega >= *clique_k ? "true" : "false") << '\n';
      if (clique_f) {
        out << "f-vector:";
        for (const auto& f : clique_f_vector(g)) out << ' ' << f;
        out << '\n';
      }
    } else if (*multi) {
      Graph g = load_dimacs_file(mc_in);
      const Strategy strategy = parse_strategy(mc_strategy);
      auto res = find_multiclique(g, mc_s, mc_r, strategy, MultiCliqueBudget{mc_budget});
      if (res.witness) {
        out << "found:";
        for (const auto& part : res.witness->parts) out << ' ' << format_vertex_set(part);
        out << '\n';
      } else {
        out << (res.conclusive ? "none\n" : "none found (greedy search is incomplete; not a proof of absence)\n");
      }
      if (mc_count) out << "count: " << count_multicliques(g, mc_s, mc_r, MultiCliqueBudget{mc_budget}) << '\n';
    } else if (*tcs) {
      Graph g = load_dimacs_file(tcs_in);
      auto rep = tcs_exact(g, tcs_s, tcs_cap);
      auto bounds = tcs_bounds(g, tcs_s);
      out << "TC_" << tcs_s << ": " << rep.value << "\nwitness:";
      for (const auto& part : rep.witness) out << ' ' << format_vertex_set(part);
      out << "\nhdim: " << rep.hdim << "\nbounds: " << bounds.lower << " <= TC_s <= " << bounds.upper << '\n';
      if (tcs_brute) out << "bruteforce: " << tcs_bruteforce(g, tcs_s) << '\n';
    } else if (*analytic) {
      run_analytic(an, out);
    } else if (*mc) {
      ExperimentConfig cfg = load_config_file(mc_config, parse_kind(mc_kind));
      if (mc_threads) cfg.thread_hint = *mc_threads;
      auto res = run_experiment(cfg);
      write_text(records_csv(cfg, res.records), mc_csv, out);
      const std::string summary = summary_json(cfg, res.summary) + "\n";
      if (mc_summary)
        write_text(summary, mc_summary, out);
      else
        (mc_csv ? out : err) << summary;
    } else if (*verify) {
      bool all = true;
      auto results = run_verify_suite([&](const CheckResult& r) {
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << fixed(r.seconds, 2) << " s)";
        if (!r.passed) out << "\n      " << r.detail;
        out << std::endl;
      });
      for (const auto& r : results) all = all && r.passed;
      out << (all ? "all checks passed\n" : "some checks FAILED\n");
      return all ? kExitOk : kExitDomain;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace rgtc
