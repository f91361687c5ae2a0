#include "rgtc/graph.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "rgtc/errors.hpp"

namespace rgtc {

Graph::Graph(std::size_t n) : rows_(n, Bitset(n)) {}

std::size_t Graph::num_edges() const {
  std::size_t deg_sum = 0;
  for (const auto& r : rows_) deg_sum += r.count();
  return deg_sum / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < rows_.size(); ++u)
    for (Vertex v = rows_[u].next(u + 1); v < rows_.size(); v = rows_[u].next(v + 1)) out.emplace_back(u, v);
  return out;
}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::cycle(std::size_t n) {
  GraphBuilder b(n);
  if (n >= 3)
    for (Vertex u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  else if (n == 2)
    b.add_edge(0, 1);
  return std::move(b).build();
}

Graph Graph::petersen() {
  GraphBuilder b(10);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);          // outer cycle
    b.add_edge(i, i + 5);                // spokes
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return std::move(b).build();
}

Graph sample_gnp(const GnpParams& params) {
  if (params.p < 0 || params.p > 1) throw DomainError("edge probability must lie in [0,1]");
  const std::size_t n = params.n;
  GraphBuilder b(n);
  if (params.p == 0) return std::move(b).build();
  const bool always = params.p == 1;
  // floor(p * 2^64), computed exactly.
  BigInt scaled = (boost::multiprecision::numerator(params.p) << 64) / boost::multiprecision::denominator(params.p);
  const auto threshold = always ? std::uint64_t{0} : scaled.convert_to<std::uint64_t>();

  std::mt19937_64 rng(params.seed);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) {
      std::uint64_t u = rng();
      if (always || u < threshold) b.add_edge(i, j);
    }
  return std::move(b).build();
}

Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") out of range for n=" +
                        std::to_string(n));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u + 1));
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

bool is_clique_set(const Graph& g, std::span<const Vertex> s) {
  for (auto v : s)
    if (v >= g.num_vertices()) throw DomainError("vertex " + std::to_string(v + 1) + " out of range");
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (s[a] == s[b] || !g.adjacent(s[a], s[b])) return false;
  return true;
}

bool is_clique_set(const Graph& g, const Bitset& s) {
  if (s.size() != g.num_vertices()) throw DomainError("vertex set width does not match graph");
  for (Vertex v = s.first(); v < s.size(); v = s.next(v + 1)) {
    Bitset rest = s;
    rest.reset(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

Graph read_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string fmt;
      if (have_header) throw ParseError("duplicate 'p' header", lineno);
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col")) throw ParseError("malformed header, expected 'p edge <n> <m>'", lineno);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw ParseError("edge line before 'p edge' header", lineno);
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", lineno);
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw ParseError("edge endpoint out of range 1.." + std::to_string(n), lineno);
      if (u == v) throw ParseError("self-loop", lineno);
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError("unknown line type '" + tag + "'", lineno);
    }
  }
  if (!have_header) throw ParseError("missing 'p edge' header", lineno);
  return graph_from_edges(n, edges);
}

std::string write_dimacs(const Graph& g) {
  auto es = g.edges();
  std::ostringstream out;
  out << "p edge " << g.num_vertices() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph load_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_dimacs(buf.str());
}

void save_dimacs_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << write_dimacs(g);
}

std::string format_vertex_set(std::span<const Vertex> s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out + "}";
}

}  // namespace rgtc
