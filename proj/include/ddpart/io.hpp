#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ddpart/graph.hpp"
#include "ddpart/zdd_store.hpp"

namespace ddpart {

/// Malformed graph or family text. The message names the source, line and
/// offending token.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Graph text:
///
///   # comment
///   p <n> <m>
///   w <vertex> <weight>     (n lines, one per vertex)
///   e <u> <v>               (m lines; file order defines e_1..e_m)
Graph parse_graph(std::istream& in, const std::string& source = "<input>");
Graph parse_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);

/// Family text: one member per line as space-separated edge indices; a line
/// holding only `-` is the empty set. `#` starts a comment.
std::vector<EdgeSet> parse_family_sets(std::istream& in, Label m,
                                       const std::string& source = "<input>");
std::vector<EdgeSet> parse_family_file(const std::string& path, Label m);
NodeRef parse_family(const std::string& path, ZddStore& zdd);
void write_family(const ZddStore& zdd, NodeRef f, std::ostream& out);

}  // namespace ddpart
