#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ddpart/cli.hpp"
#include "ddpart/io.hpp"
#include "support/corpus.hpp"

using namespace ddpart;
using namespace ddpart::testing;

namespace {

const std::string kData = DDPART_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_graph(in, "g.txt");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ddpart_io_cli_" + name);
}

}  // namespace

TEST_CASE("graph text round trip") {
  for (const auto& inst : make_corpus(10)) {
    std::ostringstream text;
    write_graph(inst.graph, text);
    std::istringstream in(text.str());
    Graph back = parse_graph(in);
    REQUIRE(back.vertex_count() == inst.graph.vertex_count());
    REQUIRE(back.edge_count() == inst.graph.edge_count());
    for (Vertex v = 1; v <= back.vertex_count(); ++v) {
      REQUIRE(back.weight(v) == inst.graph.weight(v));
    }
    for (Label e = 1; e <= back.edge_count(); ++e) {
      REQUIRE(back.edge(e).u == inst.graph.edge(e).u);
      REQUIRE(back.edge(e).v == inst.graph.edge(e).v);
    }
  }
}

TEST_CASE("graph parse errors name the line") {
  CHECK(parse_error("") == "g.txt:0: missing 'p <n> <m>' header");
  CHECK(parse_error("p 2 1\nw 1 1\nw 2 0\ne 1 2\n") ==
        "g.txt:3: weight '0' must be positive");
  CHECK(parse_error("p 2 1\nw 1 1\nw 2 1\ne 1 3\n") ==
        "g.txt:4: vertex '3' out of range");
  CHECK(parse_error("# c\np 2 1\nw 1 1\nw 2 1\ne 2 2\n") ==
        "g.txt:5: self-loop '2 2'");
  CHECK(parse_error("p 2 1\nw 1 1\nw 2 1\ne 1 2\ne 1 2\n") ==
        "g.txt:5: more than 1 edge lines");
  CHECK(parse_error("p 2 1\nw 1 x\n") == "g.txt:2: expected weight, got 'x'");
  CHECK(parse_error("p 2 1\nw 1 1\ne 1 2\n") ==
        "g.txt:3: expected 2 weight lines, found 1");
  CHECK(parse_error("p 2 1\nq\n") == "g.txt:2: unknown record 'q'");
}

TEST_CASE("family text") {
  std::istringstream in("# members\n2 1\n-\n1 2\n3\n");
  auto sets = parse_family_sets(in, 3);
  CHECK(sets == std::vector<EdgeSet>{{1, 2}, {}, {1, 2}, {3}});
  ZddStore z(3);
  CHECK(z.count(z.from_sets(sets)) == 3);

  std::istringstream bad("1\n4\n");
  CHECK_THROWS_WITH_AS(parse_family_sets(bad, 3, "f"),
                       "f:2: edge index '4' outside 1..3", ParseError);

  std::ostringstream out;
  write_family(z, z.from_sets(sets), out);
  std::istringstream again(out.str());
  CHECK(z.from_sets(parse_family_sets(again, 3)) == z.from_sets(sets));
}

TEST_CASE("cli solve on the 4-cycle example") {
  Run r = cli({"solve", "--graph", kData + "/cycle4.graph", "--lower", "3",
               "--family", kData + "/cycle4.family", "--enumerate"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "count 3\n1 2\n1 3\n2 3\n");

  Run c = cli({"count", "--graph", kData + "/cycle4.graph", "--lower", "3",
               "--family", kData + "/cycle4.family"});
  CHECK(c.out == "3\n");

  Run o = cli({"oracle", "--graph", kData + "/cycle4.graph", "--lower", "3",
               "--family", kData + "/cycle4.family", "--enumerate"});
  CHECK(o.out == r.out);

  Run all = cli({"solve", "--graph", kData + "/cycle4.graph", "--lower", "3"});
  Run all_oracle = cli({"oracle", "--graph", kData + "/cycle4.graph", "--lower", "3"});
  CHECK(all.out == all_oracle.out);

  Run stats = cli({"solve", "--graph", kData + "/cycle4.graph", "--lower", "3",
                   "--stats"});
  CHECK(stats.out.find("stage time_s nodes cardinality\nZ_S ") != std::string::npos);
}

TEST_CASE("cli ratio bound") {
  Run b = cli({"bound", "--graph", kData + "/cycle4.graph", "--components", "2",
               "--ratio", "1"});
  CHECK(b.code == kExitOk);
  CHECK(b.out == "P 8\nL_exact 4\nL 4\n");

  Run s = cli({"count", "--graph", kData + "/cycle4.graph", "--components", "2",
               "--ratio", "1"});
  Run l = cli({"count", "--graph", kData + "/cycle4.graph", "--lower", "4"});
  CHECK(s.out == l.out);
}

TEST_CASE("cli exit codes") {
  const std::string g = kData + "/cycle4.graph";
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"solve", "--graph", g}).code == kExitUsage);
  CHECK(cli({"solve", "--graph", g, "--lower", "0"}).code == kExitUsage);
  CHECK(cli({"solve", "--graph", g, "--lower", "2", "--ratio", "1"}).code ==
        kExitUsage);
  CHECK(cli({"solve", "--graph", g, "--ratio", "x", "--components", "2"}).code ==
        kExitUsage);
  CHECK(cli({"solve", "--graph", kData + "/missing.graph", "--lower", "2"}).code ==
        kExitUsage);
  CHECK(cli({"solve", "--graph", g, "--lower", "2", "--dot", "bogus"}).code ==
        kExitUsage);
  CHECK(cli({"solve", "--graph", g, "--lower", "2", "--budget", "1"}).code ==
        kExitResource);

  auto big = temp_path("big.graph");
  {
    std::ofstream out(big);
    write_graph(grid_graph(4, 5), out);
  }
  Run r = cli({"oracle", "--graph", big.string(), "--lower", "2"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("limit 24") != std::string::npos);
  std::filesystem::remove(big);
}

TEST_CASE("cli dot output") {
  auto zs = temp_path("zs.dot");
  auto ts = temp_path("ts.dot");
  Run r = cli({"solve", "--graph", kData + "/cycle4.graph", "--lower", "3",
               "--dot", "Z_S=" + zs.string(), "--dot", "T_S=" + ts.string()});
  REQUIRE(r.code == kExitOk);
  for (const auto& p : {zs, ts}) {
    std::ifstream in(p);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().rfind("digraph", 0) == 0);
    std::filesystem::remove(p);
  }
}
