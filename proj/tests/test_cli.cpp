#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "rgtc/cli.hpp"
#include "rgtc/graph.hpp"

using namespace rgtc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rgtc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("rgtc_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("analytic quantities") {
  auto z = run({"analytic", "z", "--n", "1024", "--p", "1/2"});
  CHECK(z.code == kExitOk);
  CHECK(z.out.rfind("15.241533", 0) == 0);

  auto ratio = run({"analytic", "ratio", "--n", "4", "--p", "1/2", "--r", "2", "--s", "2", "--mode", "exact"});
  CHECK(ratio.code == kExitOk);
  CHECK(ratio.out == "2\n");

  CHECK(run({"analytic", "r", "--n", "1024", "--p", "1/2", "--eps", "0.5"}).out == "14\n");
  CHECK(run({"analytic", "dsize", "--s", "2", "--r", "2"}).out == "26\n");
  CHECK(run({"analytic", "expect", "--n", "5", "--p", "1/2", "--r", "2", "--s", "2"}).out.rfind("15/2", 0) == 0);
  CHECK(run({"analytic", "sumF", "--n", "8", "--r", "2", "--s", "2"}).out == "1\n");
  CHECK(run({"analytic", "mainine", "--n", "5", "--p", "1/2", "--r", "2", "--k", "1", "--m", "1"}).out.rfind("5/2", 0) ==
        0);
  auto t0 = run({"analytic", "t0", "--n", "1000", "--p", "1/2", "--r", "2", "--s", "2"});
  CHECK(t0.code == kExitOk);
  CHECK(t0.out.find("holds = true") != std::string::npos);
  auto dom = run({"analytic", "dominance", "--n", "1000", "--p", "1/2", "--s", "2"});
  CHECK(dom.code == kExitOk);
  CHECK(dom.out.rfind("holds = true", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"analytic", "r", "--n", "2", "--p", "9/10"}).code == kExitDomain);
  CHECK(run({"analytic", "z", "--n", "1024", "--p", "0.5"}).code == kExitDomain);
  CHECK(run({"analytic", "z", "--n", "1024", "--p", "1/2", "--bogus", "3"}).code == kExitDomain);
  CHECK(run({"analytic", "nonsense", "--n", "10"}).code == kExitDomain);
  CHECK(run({"frobnicate"}).code == kExitDomain);
  CHECK(run({"analytic", "ratio", "--n", "40", "--p", "1/2", "--s", "3", "--r", "3", "--cap", "10"}).code ==
        kExitBudget);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("graph subcommands") {
  const fs::path dir = scratch();
  const std::string k3 = write_file(dir / "k3.dimacs", "c triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");

  auto tcs = run({"tcs", "--in", k3, "--s", "2", "--brute"});
  CHECK(tcs.code == kExitOk);
  CHECK(tcs.out.rfind("TC_2: 3\n", 0) == 0);
  CHECK(tcs.out.find("witness: {") != std::string::npos);
  CHECK(tcs.out.find("bruteforce: 3") != std::string::npos);

  auto cl = run({"clique", "--in", k3, "--f-vector", "--k", "4"});
  CHECK(cl.out.rfind("omega: 3\n", 0) == 0);
  CHECK(cl.out.find("has_clique(4): false") != std::string::npos);
  CHECK(cl.out.find("f-vector: 1 3 3 1") != std::string::npos);

  const std::string gpath = (dir / "g.dimacs").string();
  CHECK(run({"gen", "--n", "30", "--p", "1/2", "--seed", "9", "--out", gpath}).code == kExitOk);
  CHECK(load_dimacs_file(gpath).num_edges() == sample_gnp({30, Rational(1, 2), 9}).num_edges());
  auto again = run({"gen", "--n", "30", "--p", "1/2", "--seed", "9"});
  std::ifstream in(gpath);
  std::stringstream saved;
  saved << in.rdbuf();
  CHECK(again.out == saved.str());

  auto mc = run({"multiclique", "--in", k3, "--s", "2", "--r", "2", "--count"});
  CHECK(mc.code == kExitOk);
  CHECK(mc.out.find("none") != std::string::npos);
  CHECK(mc.out.find("count: 0") != std::string::npos);
  auto c5 = run({"multiclique", "--in", write_file(dir / "c5.dimacs", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"),
                 "--s", "2", "--r", "2", "--count"});
  CHECK(c5.out.rfind("found:", 0) == 0);
  CHECK(c5.out.find("count: 10") != std::string::npos);

  CHECK(run({"tcs", "--in", (dir / "missing.dimacs").string(), "--s", "2"}).code == kExitDomain);
  CHECK(run({"tcs", "--in", write_file(dir / "bad.dimacs", "p edge 3 1\ne 1 7\n"), "--s", "2"}).code == kExitDomain);
  CHECK(run({"tcs", "--in", gpath, "--s", "2", "--brute"}).code == kExitBudget);
  fs::remove_all(dir);
}

TEST_CASE("mc subcommand") {
  const fs::path dir = scratch();
  const std::string cfg = write_file(dir / "w.cfg", "n = 40\np = 1/2\neps = 1/2\nsamples = 6\nseed = 17\n");
  const std::string csv1 = (dir / "a.csv").string(), csv2 = (dir / "b.csv").string();
  const std::string js = (dir / "s.json").string();
  CHECK(run({"mc", "window", "--config", cfg, "--csv", csv1, "--threads", "1", "--summary", js}).code == kExitOk);
  CHECK(run({"mc", "window", "--config", cfg, "--csv", csv2, "--threads", "3"}).code == kExitOk);
  std::stringstream a, b;
  a << std::ifstream(csv1).rdbuf();
  b << std::ifstream(csv2).rdbuf();
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("index,seed,n,p,eps,omega,r_lo,r_hi,in_window\n", 0) == 0);
  CHECK(fs::file_size(js) > 0);

  auto out = run({"mc", "window", "--config", cfg});
  CHECK(out.out == a.str());
  CHECK(run({"mc", "tcs", "--config", write_file(dir / "k.cfg", "kind = window\nn = 20\n")}).code == kExitDomain);
  fs::remove_all(dir);
}

TEST_CASE("verify") {
  auto v = run({"verify"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("all checks passed") != std::string::npos);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
