#include "ddpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ddpart {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  /// Next non-blank line with comments stripped, split into tokens.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream split(line);
      tokens.clear();
      for (std::string t; split >> t;) tokens.push_back(t);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(source_ + ":" + std::to_string(line_no_) + ": " + what);
  }

  std::uint64_t number(const std::string& token, const char* what) const {
    std::uint64_t value = 0;
    auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
      fail(std::string("expected ") + what + ", got '" + token + "'");
    }
    return value;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

}  // namespace

Graph parse_graph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::string> tok;
  if (!reader.next(tok)) reader.fail("missing 'p <n> <m>' header");
  if (tok.size() != 3 || tok[0] != "p") {
    reader.fail("expected 'p <n> <m>' header, got '" + tok[0] + "'");
  }
  const auto n = reader.number(tok[1], "vertex count");
  const auto m = reader.number(tok[2], "edge count");
  if (n > 0xffffff) reader.fail("vertex count '" + tok[1] + "' too large");

  Graph g(static_cast<Vertex>(n));
  std::vector<bool> weighted(n + 1, false);
  std::size_t weights = 0;
  while (reader.next(tok)) {
    if (tok[0] == "w") {
      if (tok.size() != 3) reader.fail("expected 'w <vertex> <weight>'");
      auto v = reader.number(tok[1], "vertex");
      auto w = reader.number(tok[2], "weight");
      if (v == 0 || v > n) reader.fail("vertex '" + tok[1] + "' out of range");
      if (w == 0) reader.fail("weight '" + tok[2] + "' must be positive");
      if (weighted[v]) reader.fail("duplicate weight for vertex '" + tok[1] + "'");
      weighted[v] = true;
      ++weights;
      g.set_weight(static_cast<Vertex>(v), w);
    } else if (tok[0] == "e") {
      if (tok.size() != 3) reader.fail("expected 'e <u> <v>'");
      auto u = reader.number(tok[1], "vertex");
      auto v = reader.number(tok[2], "vertex");
      if (u == 0 || u > n) reader.fail("vertex '" + tok[1] + "' out of range");
      if (v == 0 || v > n) reader.fail("vertex '" + tok[2] + "' out of range");
      if (u == v) reader.fail("self-loop '" + tok[1] + " " + tok[2] + "'");
      if (g.edge_count() == m) reader.fail("more than " + std::to_string(m) + " edge lines");
      g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else {
      reader.fail("unknown record '" + tok[0] + "'");
    }
  }
  if (weights != n) {
    reader.fail("expected " + std::to_string(n) + " weight lines, found " +
                std::to_string(weights));
  }
  if (g.edge_count() != m) {
    reader.fail("expected " + std::to_string(m) + " edge lines, found " +
                std::to_string(g.edge_count()));
  }
  return g;
}

Graph parse_graph_file(const std::string& path) {
  auto in = open(path);
  return parse_graph(in, path);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    out << "w " << v << ' ' << g.weight(v) << '\n';
  }
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::vector<EdgeSet> parse_family_sets(std::istream& in, Label m,
                                       const std::string& source) {
  LineReader reader(in, source);
  std::vector<EdgeSet> sets;
  std::vector<std::string> tok;
  while (reader.next(tok)) {
    EdgeSet s;
    if (!(tok.size() == 1 && tok[0] == "-")) {
      for (const auto& t : tok) {
        auto e = reader.number(t, "edge index");
        if (e == 0 || e > m) {
          reader.fail("edge index '" + t + "' outside 1.." + std::to_string(m));
        }
        s.push_back(static_cast<Label>(e));
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    sets.push_back(std::move(s));
  }
  return sets;
}

std::vector<EdgeSet> parse_family_file(const std::string& path, Label m) {
  auto in = open(path);
  return parse_family_sets(in, m, path);
}

NodeRef parse_family(const std::string& path, ZddStore& zdd) {
  auto sets = parse_family_file(path, zdd.universe());
  return zdd.from_sets(sets);
}

void write_family(const ZddStore& zdd, NodeRef f, std::ostream& out) {
  zdd.for_each(f, [&](const EdgeSet& s) {
    if (s.empty()) {
      out << "-\n";
      return;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << (i ? " " : "") << s[i];
    }
    out << '\n';
  });
}

}  // namespace ddpart
