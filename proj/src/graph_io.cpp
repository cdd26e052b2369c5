#include "cycram/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cycram::io {

Graph read_edge_list(std::istream& in) {
  std::string line;
  int order = -1;
  long long declared = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == 'c') continue;
    if (tag == "p") {
      if (order >= 0) throw std::invalid_argument("duplicate header line");
      if (!(ls >> order >> declared) || order < 0 || declared < 0) throw std::invalid_argument("malformed header line");
    } else if (tag == "e") {
      if (order < 0) throw std::invalid_argument("edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw std::invalid_argument("malformed edge line: " + line);
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      throw std::invalid_argument("unknown line tag: " + tag);
    }
  }
  if (order < 0) throw std::invalid_argument("missing header line");
  if (static_cast<long long>(edges.size()) != declared) throw std::invalid_argument("edge count does not match header");
  // from_edges rejects self-loops and duplicates in either orientation.
  return Graph::from_edges(order, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph from_graph6(const std::string& raw) {
  std::string s = raw;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) {
    if (i >= s.size()) throw std::invalid_argument("truncated graph6 string");
    int b = static_cast<unsigned char>(s[i]) - 63;
    if (b < 0 || b > 63) throw std::invalid_argument("invalid graph6 character");
    return b;
  };
  long n = 0;
  if (s.empty()) throw std::invalid_argument("empty graph6 string");
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != '~') {
    n = (static_cast<long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    throw std::invalid_argument("graph6 orders above 258047 are not supported");
  }
  GraphBuilder b(static_cast<int>(n));
  long bitIndex = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bitIndex) {
      int chunk = byte(pos + static_cast<std::size_t>(bitIndex / 6));
      if ((chunk >> (5 - bitIndex % 6)) & 1) b.add_edge(u, v);
    }
  std::size_t used = pos + static_cast<std::size_t>((bitIndex + 5) / 6);
  if (used != s.size()) throw std::invalid_argument("trailing characters in graph6 string");
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6 orders above 258047 are not supported");
  }
  int acc = 0, bits = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

namespace {
bool is_g6(const std::string& path) { return path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0; }
}  // namespace

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  if (is_g6(path)) {
    std::string line;
    std::getline(in, line);
    return from_graph6(line);
  }
  return read_edge_list(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  if (is_g6(path)) out << to_graph6(g) << '\n';
  else write_edge_list(out, g);
}

}  // namespace cycram::io
