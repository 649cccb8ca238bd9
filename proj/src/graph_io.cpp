#include "pdecomp/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pdecomp/errors.hpp"

namespace pdecomp {
namespace {

// Next non-empty, comment-stripped line. Returns false at EOF.
bool next_record(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
  throw GraphFormatError("line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

WeightedGraph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_record(in, line, lineno)) throw GraphFormatError("missing 'n m' header");

  long long n = -1;
  long long m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) fail(lineno, "expected header 'n m'");
    if (n <= 0 || m < 0) fail(lineno, "header needs n >= 1 and m >= 0");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_record(in, line, lineno)) {
      throw GraphFormatError("expected " + std::to_string(m) + " edges, found " +
                             std::to_string(i));
    }
    std::istringstream es(line);
    long long u = -1;
    long long v = -1;
    double w = 0.0;
    std::string extra;
    if (!(es >> u >> v >> w) || (es >> extra)) fail(lineno, "expected edge 'u v w'");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex id out of range");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
  }
  if (next_record(in, line, lineno)) fail(lineno, "trailing data after the last edge");

  return WeightedGraph::from_edges(static_cast<std::size_t>(n), std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  auto old_precision = out.precision(17);
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  out.precision(old_precision);
}

}  // namespace pdecomp
