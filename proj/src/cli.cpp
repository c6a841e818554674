#include "ddpart/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ddpart/io.hpp"
#include "ddpart/oracle.hpp"
#include "ddpart/pipeline.hpp"

namespace ddpart {

namespace {

constexpr Label kOracleEdgeLimit = 24;

struct Inputs {
  std::string graph_path;
  std::optional<Weight> lower;
  std::optional<std::string> ratio;
  std::optional<std::uint64_t> components;
  std::optional<std::string> family_path;
  bool all = false;
  bool enumerate = false;
  bool stats = false;
  std::vector<std::string> dots;
  std::size_t budget = kDefaultNodeBudget;
};

void add_bound_options(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--graph", in.graph_path, "graph file")->required();
  auto* lower = cmd->add_option("--lower", in.lower, "lower bound L");
  auto* ratio = cmd->add_option("--ratio", in.ratio, "max component ratio r");
  cmd->add_option("--components", in.components, "component count k");
  lower->excludes(ratio);
}

void add_family_options(CLI::App* cmd, Inputs& in) {
  auto* family = cmd->add_option("--family", in.family_path, "family file");
  auto* all = cmd->add_flag("--all", in.all, "use every edge subset (default)");
  family->excludes(all);
  cmd->add_flag("--enumerate", in.enumerate, "print the surviving members");
}

Weight resolve_bound(const Inputs& in, const Graph& g) {
  if (in.lower) {
    if (in.components) {
      throw CLI::ValidationError("--components", "only valid with --ratio");
    }
    if (*in.lower == 0) {
      throw CLI::ValidationError("--lower", "must be positive");
    }
    return *in.lower;
  }
  if (!in.ratio || !in.components) {
    throw CLI::ValidationError("bound",
                               "give --lower L or both --ratio and --components");
  }
  return lower_bound_from_ratio(g.total_weight(), *in.components,
                                parse_decimal(*in.ratio))
      .floor;
}

void print_sets(const std::vector<EdgeSet>& sets, std::ostream& out) {
  for (const auto& s : sets) {
    if (s.empty()) out << '-';
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
}

int solve(const Inputs& in, bool count_only, std::ostream& out) {
  Graph g = parse_graph_file(in.graph_path);
  Weight bound = resolve_bound(in, g);

  std::map<std::string, std::string> dot_paths;
  for (const auto& spec : in.dots) {
    auto eq = spec.find('=');
    std::string stage = spec.substr(0, eq);
    if (eq == std::string::npos ||
        (stage != "Z_A" && stage != "Z_S" && stage != "T_S" &&
         stage != "Z_SUP" && stage != "Z_B")) {
      throw CLI::ValidationError(
          "--dot", "expected STAGE=PATH with STAGE in Z_A, Z_S, T_S, Z_SUP, Z_B");
    }
    dot_paths[stage] = spec.substr(eq + 1);
  }

  ZddStore zdd(g.edge_count());
  NodeRef family = in.family_path ? parse_family(*in.family_path, zdd)
                                  : zdd.all_subsets();
  LowerBoundFilter filter(g, bound, zdd, in.budget);
  NodeRef result = filter.filter(family);

  if (count_only) {
    out << zdd.count(result) << '\n';
  } else {
    out << "count " << zdd.count(result) << '\n';
    if (in.enumerate) {
      auto sets = zdd.enumerate(result);
      std::sort(sets.begin(), sets.end());
      print_sets(sets, out);
    }
    if (in.stats) out << emit_stats(filter.reports());
  }

  for (const auto& [stage, path] : dot_paths) {
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    if (stage == "T_S") {
      filter.tdd().write_dot(filter.signed_cutsets(), file);
    } else {
      NodeRef root = stage == "Z_A"   ? family
                     : stage == "Z_S" ? filter.light_components()
                     : stage == "Z_SUP" ? filter.supersets()
                                        : result;
      zdd.write_dot(root, file);
    }
  }
  return kExitOk;
}

int oracle(const Inputs& in, std::ostream& out, std::ostream& err) {
  Graph g = parse_graph_file(in.graph_path);
  if (g.edge_count() > kOracleEdgeLimit) {
    err << "oracle: refusing a graph with " << g.edge_count()
        << " edges (limit " << kOracleEdgeLimit << ")\n";
    return kExitUsage;
  }
  Weight bound = resolve_bound(in, g);
  std::vector<EdgeSet> family;
  if (in.family_path) {
    family = parse_family_file(*in.family_path, g.edge_count());
  } else {
    const Label m = g.edge_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      EdgeSet s;
      for (Label e = 1; e <= m; ++e) {
        if (mask >> (e - 1) & 1) s.push_back(e);
      }
      family.push_back(std::move(s));
    }
  }
  auto kept = brute_force_filter(g, family, bound);
  std::sort(kept.begin(), kept.end());
  out << "count " << kept.size() << '\n';
  if (in.enumerate) print_sets(kept, out);
  return kExitOk;
}

int bound(const Inputs& in, std::ostream& out) {
  Graph g = parse_graph_file(in.graph_path);
  if (!in.ratio || !in.components) {
    throw CLI::ValidationError("bound", "--ratio and --components are required");
  }
  auto b = lower_bound_from_ratio(g.total_weight(), *in.components,
                                  parse_decimal(*in.ratio));
  out << "P " << g.total_weight() << '\n';
  out << "L_exact " << b.exact << '\n';
  out << "L " << b.floor << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Lower-bound filtering of graph partitions with ZDDs", "ddpart"};
  app.require_subcommand(1);
  Inputs in;

  auto* solve_cmd = app.add_subcommand(
      "solve", "filter a family of partitions by a component weight bound");
  add_bound_options(solve_cmd, in);
  add_family_options(solve_cmd, in);
  solve_cmd->add_flag("--stats", in.stats, "print per-stage statistics");
  solve_cmd->add_option("--dot", in.dots, "write STAGE=PATH as Graphviz");
  solve_cmd->add_option("--budget", in.budget, "node budget per stage");

  auto* count_cmd = app.add_subcommand("count", "print only the cardinality");
  add_bound_options(count_cmd, in);
  count_cmd->add_option("--family", in.family_path, "family file");
  count_cmd->add_flag("--all", in.all, "use every edge subset (default)");
  count_cmd->add_option("--budget", in.budget, "node budget per stage");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "brute-force filter (at most 24 edges)");
  add_bound_options(oracle_cmd, in);
  add_family_options(oracle_cmd, in);

  auto* bound_cmd =
      app.add_subcommand("bound", "compute L(k, r) = P / (r (k - 1) + 1)");
  bound_cmd->add_option("--graph", in.graph_path, "graph file")->required();
  bound_cmd->add_option("--components", in.components, "component count k")
      ->required();
  bound_cmd->add_option("--ratio", in.ratio, "max component ratio r")
      ->required();

  std::vector<const char*> argv{"ddpart"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (solve_cmd->parsed()) return solve(in, false, out);
    if (count_cmd->parsed()) return solve(in, true, out);
    if (oracle_cmd->parsed()) return oracle(in, out, err);
    return bound(in, out);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ddpart
