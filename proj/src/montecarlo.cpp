#include "rgtc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rgtc/analytic.hpp"
#include "rgtc/clique.hpp"
#include "rgtc/errors.hpp"
#include "rgtc/graph.hpp"
#include "rgtc/tcs.hpp"

namespace rgtc {

ExperimentKind parse_kind(std::string_view s) {
  if (s == "window") return ExperimentKind::Window;
  if (s == "multiclique") return ExperimentKind::MultiClique;
  if (s == "tcs") return ExperimentKind::Tcs;
  if (s == "expect" || s == "expectation") return ExperimentKind::Expectation;
  throw DomainError("unknown experiment kind '" + std::string(s) + "'");
}

std::string_view to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Window:
      return "window";
    case ExperimentKind::MultiClique:
      return "multiclique";
    case ExperimentKind::Tcs:
      return "tcs";
    case ExperimentKind::Expectation:
      return "expect";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (samples < 1) throw DomainError("samples must be >= 1");
  if (s < 1) throw DomainError("s must be >= 1");
  if (epsilon <= 0) throw DomainError("eps must be positive");
  if (n < 1) throw DomainError("n must be >= 1");
  if (kind == ExperimentKind::Expectation) {
    if (p < 0 || p > 1) throw DomainError("p must lie in [0,1]");
    if (!r_override && n < 2) throw DomainError("n must be >= 2");
  } else {
    require_open_probability(p);
    if (n < 2) throw DomainError("n must be >= 2");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_u64(const std::string& v, const std::string& key, std::size_t line) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("'" + key + "' expects a non-negative integer, got '" + v + "'", line);
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ParseError("'" + key + "' is out of range", line);
  }
}

}  // namespace

ExperimentConfig parse_config(std::string_view text, std::optional<ExperimentKind> expected) {
  ExperimentConfig c;
  if (expected) c.kind = *expected;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    try {
      if (key == "kind") {
        const auto k = parse_kind(value);
        if (expected && k != *expected)
          throw ParseError("config declares kind '" + value + "' but '" + std::string(to_string(*expected)) +
                               "' was requested",
                           lineno);
        c.kind = k;
      }
      else if (key == "n")
        c.n = parse_u64(value, key, lineno);
      else if (key == "p")
        c.p = parse_rational(value);
      else if (key == "eps")
        c.epsilon = parse_decimal(value);
      else if (key == "s")
        c.s = parse_u64(value, key, lineno);
      else if (key == "r")
        c.r_override = parse_u64(value, key, lineno);
      else if (key == "samples")
        c.samples = parse_u64(value, key, lineno);
      else if (key == "seed")
        c.master_seed = parse_u64(value, key, lineno);
      else if (key == "strategy")
        c.strategy = parse_strategy(value);
      else if (key == "threads")
        c.thread_hint = static_cast<unsigned>(parse_u64(value, key, lineno));
      else if (key == "node_budget")
        c.node_budget = parse_u64(value, key, lineno);
      else
        throw ParseError("unknown key '" + key + "'", lineno);
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config_file(const std::string& path, std::optional<ExperimentKind> expected) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), expected);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  std::uint64_t z = master_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Estimate proportion_estimate(std::size_t successes, std::size_t trials) {
  Estimate e;
  if (trials == 0) return e;
  const double p = static_cast<double>(successes) / static_cast<double>(trials);
  const double half = 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(trials));
  e.value = p;
  e.ci_low = std::max(0.0, p - half);
  e.ci_high = std::min(1.0, p + half);
  return e;
}

std::pair<long long, long long> window_bounds(std::uint64_t n, const Rational& p, const Rational& epsilon) {
  const long double z = z_value(n, p);
  const long double eps = to_long_double(epsilon);
  return {static_cast<long long>(std::floor(z - eps + kGuardBand)),
          static_cast<long long>(std::floor(z + eps + kGuardBand))};
}

namespace {

// Runs `work` for every index, concurrently up to thread_hint. Each record
// depends only on its index, so the output is scheduler independent.
std::vector<SampleRecord> run_samples(const ExperimentConfig& config, std::uint64_t count,
                                      const std::function<void(SampleRecord&)>& work) {
  std::vector<SampleRecord> records(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      SampleRecord& rec = records[i];
      rec.index = i;
      rec.seed = derive_seed(config.master_seed, i);
      const auto start = std::chrono::steady_clock::now();
      try {
        work(rec);
      } catch (const BudgetExceeded& e) {
        rec.error = e.what();
      }
      rec.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned threads = static_cast<unsigned>(std::clamp<std::uint64_t>(config.thread_hint, 1, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return records;
}

Graph sample_for(const ExperimentConfig& c, const SampleRecord& rec) {
  return sample_gnp(GnpParams{c.n, c.p, rec.seed});
}

void require_kind(const ExperimentConfig& c, ExperimentKind k) {
  if (c.kind != k)
    throw DomainError("config kind is '" + std::string(to_string(c.kind)) + "', expected '" + std::string(to_string(k)) +
                      "'");
  c.validate();
}

std::size_t count_errors(const std::vector<SampleRecord>& records) {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.error.has_value(); }));
}

std::size_t target_r(const ExperimentConfig& c) {
  return c.r_override ? *c.r_override : clique_target_r(c.n, c.p, to_long_double(c.epsilon));
}

}  // namespace

ExperimentResult run_window(const ExperimentConfig& config) {
  require_kind(config, ExperimentKind::Window);
  const auto [lo, hi] = window_bounds(config.n, config.p, config.epsilon);
  ExperimentResult res;
  res.records = run_samples(config, config.samples, [&](SampleRecord& rec) {
    Graph g = sample_for(config, rec);
    CliqueReport rep = clique_number(g, SearchBudget{config.node_budget});
    if (!is_clique_set(g, rep.witness) || rep.witness.size() != rep.omega)
      throw std::logic_error("clique witness failed revalidation");
    rec.omega = rep.omega;
    rec.in_window = static_cast<long long>(rep.omega) >= lo && static_cast<long long>(rep.omega) <= hi;
  });
  auto& s = res.summary;
  s.kind = config.kind;
  s.samples = res.records.size();
  s.errors = count_errors(res.records);
  s.window_lo = lo;
  s.window_hi = hi;
  const auto hits = std::count_if(res.records.begin(), res.records.end(), [](const auto& r) { return !r.error && r.in_window; });
  s.probability = proportion_estimate(static_cast<std::size_t>(hits), s.samples - s.errors);
  return res;
}

ExperimentResult run_multiclique(const ExperimentConfig& config) {
  require_kind(config, ExperimentKind::MultiClique);
  const std::size_t r = target_r(config);
  ExperimentResult res;
  res.records = run_samples(config, config.samples, [&](SampleRecord& rec) {
    Graph g = sample_for(config, rec);
    rec.r = r;
    auto found = find_multiclique(g, config.s, r, config.strategy, MultiCliqueBudget{config.node_budget});
    if (found.witness && !is_valid_multiclique(g, *found.witness, config.s))
      throw std::logic_error("multi-clique witness failed revalidation");
    rec.found = found.witness.has_value();
  });
  auto& s = res.summary;
  s.kind = config.kind;
  s.samples = res.records.size();
  s.errors = count_errors(res.records);
  s.r = r;
  const auto [lo, hi] = window_bounds(config.n, config.p, config.epsilon);
  s.window_lo = lo;
  s.window_hi = hi;
  s.lower_bound_only = config.strategy == Strategy::Greedy;
  const auto hits = std::count_if(res.records.begin(), res.records.end(), [](const auto& rec) { return !rec.error && rec.found; });
  s.probability = proportion_estimate(static_cast<std::size_t>(hits), s.samples - s.errors);
  return res;
}

ExperimentResult run_tcs(const ExperimentConfig& config) {
  require_kind(config, ExperimentKind::Tcs);
  const auto [lo, hi] = window_bounds(config.n, config.p, config.epsilon);
  const long long sp = static_cast<long long>(config.s);
  ExperimentResult res;
  res.records = run_samples(config, config.samples, [&](SampleRecord& rec) {
    Graph g = sample_for(config, rec);
    if (config.strategy == Strategy::Exact) {
      TcsReport rep = tcs_exact(g, config.s);
      for (const auto& part : rep.witness)
        if (!is_clique_set(g, part)) throw std::logic_error("TC_s witness failed revalidation");
      rec.omega = rep.hdim;
      rec.tcs_lo = rec.tcs_hi = rep.value;
      rec.tcs_is_exact = true;
    } else {
      // Certified interval [max(s r_found, (s-1) C), s C].
      const std::size_t c = clique_number(g, SearchBudget{config.node_budget}).omega;
      auto sizes = greedy_peel_sizes(g, config.s);
      const std::size_t r_found = *std::min_element(sizes.begin(), sizes.end());
      rec.omega = c;
      rec.tcs_lo = config.s == 1 ? c : std::max(config.s * r_found, (config.s - 1) * c);
      rec.tcs_hi = config.s == 1 ? c : config.s * c;
      rec.tcs_is_exact = rec.tcs_lo == rec.tcs_hi;
    }
    const auto tlo = static_cast<long long>(rec.tcs_lo), thi = static_cast<long long>(rec.tcs_hi);
    const auto c = static_cast<long long>(rec.omega);
    rec.in_window_thm14 = tlo >= sp * lo && thi <= sp * hi;
    rec.in_window_cor34 = tlo >= sp * (c - 1) && thi <= sp * c;
  });
  auto& s = res.summary;
  s.kind = config.kind;
  s.samples = res.records.size();
  s.errors = count_errors(res.records);
  s.window_lo = lo;
  s.window_hi = hi;
  std::size_t thm = 0, cor = 0;
  for (const auto& rec : res.records) {
    if (rec.error) continue;
    thm += rec.in_window_thm14;
    cor += rec.in_window_cor34;
  }
  s.probability = proportion_estimate(thm, s.samples - s.errors);
  s.probability_cor34 = proportion_estimate(cor, s.samples - s.errors);
  return res;
}

ExperimentResult estimate_expectation(const ExperimentConfig& config) {
  require_kind(config, ExperimentKind::Expectation);
  const std::size_t r = target_r(config);
  const std::uint64_t n = config.n;
  if (config.s * r > n) throw DomainError("precondition s*r <= n violated");
  const std::uint64_t pairs = n * (n - 1) / 2;
  ExperimentResult res;
  auto& s = res.summary;
  s.kind = config.kind;
  s.r = r;
  s.formula = expected_multicliques(n, config.p, r, config.s).exact();

  if (pairs <= 20) {
    // Exhaustive mode: every labelled graph weighted by p^e (1-p)^(pairs-e).
    s.exhaustive = true;
    std::vector<Edge> all;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    ExperimentConfig cfg = config;
    cfg.master_seed = 0;
    res.records = run_samples(cfg, std::uint64_t{1} << pairs, [&](SampleRecord& rec) {
      rec.seed = rec.index;  // the edge mask
      std::vector<Edge> es;
      for (std::size_t k = 0; k < pairs; ++k)
        if (rec.index >> k & 1u) es.push_back(all[k]);
      Graph g = graph_from_edges(n, es);
      rec.r = r;
      rec.count = count_multicliques(g, config.s, r, MultiCliqueBudget{config.node_budget});
      const auto e = static_cast<unsigned>(es.size());
      rec.weight = pow(config.p, e) * pow(1 - config.p, static_cast<unsigned>(pairs) - e);
    });
    Rational mean = 0;
    for (const auto& rec : res.records) mean += rec.weight * Rational(rec.count);
    s.exact_mean = mean;
    s.samples = res.records.size();
    s.errors = count_errors(res.records);
    s.mean.value = s.mean.ci_low = s.mean.ci_high = static_cast<double>(to_long_double(mean));
    return res;
  }

  res.records = run_samples(config, config.samples, [&](SampleRecord& rec) {
    Graph g = sample_for(config, rec);
    rec.r = r;
    rec.count = count_multicliques(g, config.s, r, MultiCliqueBudget{config.node_budget});
  });
  s.samples = res.records.size();
  s.errors = count_errors(res.records);
  // Accumulate in index order so the floating-point result is reproducible.
  long double sum = 0, sumsq = 0;
  std::size_t ok = 0;
  for (const auto& rec : res.records) {
    if (rec.error) continue;
    const auto x = rec.count.convert_to<long double>();
    sum += x;
    sumsq += x * x;
    ++ok;
  }
  if (ok > 0) {
    const long double mean = sum / static_cast<long double>(ok);
    const long double var = ok > 1 ? (sumsq - static_cast<long double>(ok) * mean * mean) / static_cast<long double>(ok - 1) : 0;
    const long double half = 1.96L * std::sqrt(std::max(var, 0.0L) / static_cast<long double>(ok));
    s.mean = {static_cast<double>(mean), static_cast<double>(mean - half), static_cast<double>(mean + half)};
  }
  return res;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  switch (config.kind) {
    case ExperimentKind::Window:
      return run_window(config);
    case ExperimentKind::MultiClique:
      return run_multiclique(config);
    case ExperimentKind::Tcs:
      return run_tcs(config);
    case ExperimentKind::Expectation:
      return estimate_expectation(config);
  }
  throw DomainError("unknown experiment kind");
}

std::string records_csv(const ExperimentConfig& c, const std::vector<SampleRecord>& records) {
  std::ostringstream out;
  const std::string p = to_string(c.p), eps = to_string(c.epsilon);
  auto err = [](const SampleRecord& r) { return r.error.has_value(); };
  switch (c.kind) {
    case ExperimentKind::Window: {
      const auto [lo, hi] = window_bounds(c.n, c.p, c.epsilon);
      out << "index,seed,n,p,eps,omega,r_lo,r_hi,in_window\n";
      for (const auto& r : records) {
        out << r.index << ',' << r.seed << ',' << c.n << ',' << p << ',' << eps << ',';
        if (err(r))
          out << "NA";
        else
          out << r.omega;
        out << ',' << lo << ',' << hi << ',' << (err(r) ? "NA" : (r.in_window ? "1" : "0")) << '\n';
      }
      break;
    }
    case ExperimentKind::Tcs:
      out << "index,seed,n,p,eps,s,tcs_lo,tcs_hi,exact,in_window_thm14,in_window_cor34\n";
      for (const auto& r : records) {
        out << r.index << ',' << r.seed << ',' << c.n << ',' << p << ',' << eps << ',' << c.s << ',';
        if (err(r))
          out << "NA,NA,NA,NA,NA\n";
        else
          out << r.tcs_lo << ',' << r.tcs_hi << ',' << r.tcs_is_exact << ',' << r.in_window_thm14 << ','
              << r.in_window_cor34 << '\n';
      }
      break;
    case ExperimentKind::MultiClique:
      out << "index,seed,n,p,eps,s,r,strategy,found\n";
      for (const auto& r : records) {
        out << r.index << ',' << r.seed << ',' << c.n << ',' << p << ',' << eps << ',' << c.s << ',' << r.r << ','
            << to_string(c.strategy) << ',' << (err(r) ? "NA" : (r.found ? "1" : "0")) << '\n';
      }
      break;
    case ExperimentKind::Expectation:
      out << "index,seed,n,p,s,r,count,weight\n";
      for (const auto& r : records) {
        out << r.index << ',' << r.seed << ',' << c.n << ',' << p << ',' << c.s << ',' << r.r << ','
            << (err(r) ? std::string("NA") : r.count.str()) << ',' << (r.weight == 0 ? std::string("") : to_string(r.weight))
            << '\n';
      }
      break;
  }
  return out.str();
}

std::string summary_json(const ExperimentConfig& c, const Summary& s) {
  using nlohmann::ordered_json;
  auto est = [](const Estimate& e) { return ordered_json{{"value", e.value}, {"ci95", {e.ci_low, e.ci_high}}}; };
  ordered_json j;
  j["kind"] = std::string(to_string(s.kind));
  j["n"] = c.n;
  j["p"] = to_string(c.p);
  j["eps"] = to_string(c.epsilon);
  j["s"] = c.s;
  j["samples"] = s.samples;
  j["errors"] = s.errors;
  j["master_seed"] = c.master_seed;
  if (s.window_lo) j["window"] = {*s.window_lo, *s.window_hi};
  switch (s.kind) {
    case ExperimentKind::Window:
      j["probability_in_window"] = est(s.probability);
      break;
    case ExperimentKind::MultiClique:
      j["r"] = s.r;
      j["strategy"] = std::string(to_string(c.strategy));
      j["success_fraction"] = est(s.probability);
      j["lower_bound_on_probability"] = s.lower_bound_only;
      break;
    case ExperimentKind::Tcs:
      j["strategy"] = std::string(to_string(c.strategy));
      j["probability_in_thm14_window"] = est(s.probability);
      if (s.probability_cor34) j["probability_in_cor34_window"] = est(*s.probability_cor34);
      break;
    case ExperimentKind::Expectation:
      j["r"] = s.r;
      j["exhaustive"] = s.exhaustive;
      j["mean"] = est(s.mean);
      if (s.exact_mean) j["exact_mean"] = to_string(*s.exact_mean);
      if (s.formula) {
        j["formula"] = to_string(*s.formula);
        j["formula_value"] = static_cast<double>(to_long_double(*s.formula));
      }
      break;
  }
  return j.dump(2);
}

}  // namespace rgtc
