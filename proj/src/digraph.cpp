#include "arcsemi/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace arcsemi {

Digraph::Digraph(int n, std::span<const VertexPair> arc_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  out_.assign(n + 1, {});
  in_.assign(n + 1, {});
  for (auto [u, v] : arc_list) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("arc (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range 1.." +
                                  std::to_string(n));
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    out_[u].push_back(v);
  }
  for (int v = 1; v <= n; ++v) {
    auto& o = out_[v];
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    arc_count_ += static_cast<int>(o.size());
  }
  for (int u = 1; u <= n; ++u)
    for (int v : out_[u]) in_[v].push_back(u);
  for (int v = 1; v <= n; ++v) std::sort(in_[v].begin(), in_[v].end());
}

bool Digraph::has_arc(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<VertexPair> Digraph::arcs() const {
  std::vector<VertexPair> result;
  result.reserve(arc_count_);
  for (int u = 1; u <= n_; ++u)
    for (int v : out_[u]) result.emplace_back(u, v);
  return result;
}

bool Digraph::is_symmetric() const {
  for (int u = 1; u <= n_; ++u)
    for (int v : out_[u])
      if (!has_arc(v, u)) return false;
  return true;
}

bool Digraph::operator==(const Digraph& other) const {
  return n_ == other.n_ && out_ == other.out_;
}

Graph::Graph(Digraph d) : d_(std::move(d)) {
  if (!d_.is_symmetric())
    throw std::invalid_argument("graph requires a symmetric arc set");
}

Graph Graph::from_edges(int n, std::span<const VertexPair> edges) {
  std::vector<VertexPair> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Graph(Digraph(n, arcs));
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> result;
  result.reserve(edge_count());
  for (int u = 1; u <= vertex_count(); ++u)
    for (int v : d_.out(u))
      if (u < v) result.emplace_back(u, v);
  return result;
}

namespace {

bool parse_int(std::string_view s, int& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  int n = -1;
  std::vector<VertexPair> arcs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0].front() == '#') {
      if (pos > text.size()) break;
      continue;
    }
    if (n < 0) {
      if (toks.size() != 1 || !parse_int(toks[0], n) || n < 0)
        throw ParseError(line_no, "expected vertex count");
    } else {
      int u, v;
      if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
        throw ParseError(line_no, "expected arc \"u v\"");
      if (u == v)
        throw ParseError(line_no, "loop at vertex " + std::to_string(u));
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
      arcs.emplace_back(u, v);
    }
    if (pos > text.size()) break;
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Digraph(n, arcs);
}

std::string write_digraph(const Digraph& d) {
  std::ostringstream os;
  os << d.vertex_count() << '\n';
  for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace arcsemi
