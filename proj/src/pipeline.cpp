#include "ddpart/pipeline.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "ddpart/cutset_tdd.hpp"
#include "ddpart/light_components.hpp"
#include "ddpart/superset.hpp"

namespace ddpart {

LowerBoundFilter::LowerBoundFilter(const Graph& g, Weight bound, ZddStore& zdd,
                                   std::size_t node_budget)
    : graph_(g),
      bound_(bound),
      zdd_(zdd),
      tdd_(g.edge_count()),
      budget_(node_budget) {
  if (bound == 0) throw UsageError("lower bound must be positive");
  if (zdd.universe() != g.edge_count()) {
    throw UsageError("ZDD store universe does not match the edge count");
  }
  tdd_.set_node_limit(budget_);
}

template <class Build>
NodeRef LowerBoundFilter::run_stage(const char* name, Build&& build) {
  const std::size_t saved_limit = zdd_.node_limit();
  zdd_.set_node_limit(std::min(saved_limit, zdd_.node_count() + budget_));
  auto start = std::chrono::steady_clock::now();
  StageReport report;
  report.stage = name;
  NodeRef root;
  try {
    root = build(report);
  } catch (const ResourceError& e) {
    zdd_.set_node_limit(saved_limit);
    throw ResourceError(std::string("stage ") + name + ": " + e.what());
  }
  zdd_.set_node_limit(saved_limit);
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  reports_.push_back(std::move(report));
  return root;
}

NodeRef LowerBoundFilter::light_components() {
  if (!zs_) {
    zs_ = run_stage("Z_S", [&](StageReport& r) {
      SearchOptions options;
      options.state_limit = budget_;
      NodeRef root =
          build_light_components(graph_, bound_, zdd_, options).root;
      r.nodes = zdd_.size(root);
      r.cardinality = zdd_.count(root);
      return root;
    });
  }
  return *zs_;
}

NodeRef LowerBoundFilter::signed_cutsets() {
  if (!ts_) {
    NodeRef zs = light_components();
    ts_ = run_stage("T_S+-", [&](StageReport& r) {
      SearchOptions options;
      options.state_limit = budget_;
      NodeRef root =
          build_cutset_tdd_subset(graph_, zdd_, zs, tdd_, options).root;
      r.nodes = tdd_.size(root);
      // Equal to |Z_S| by construction; counted independently here.
      r.cardinality = tdd_.count(root);
      return root;
    });
  }
  return *ts_;
}

NodeRef LowerBoundFilter::supersets() {
  if (!sup_) {
    NodeRef ts = signed_cutsets();
    sup_ = run_stage("Z_S_up", [&](StageReport& r) {
      SearchOptions options;
      options.state_limit = budget_;
      NodeRef root = assemble_sup(graph_, tdd_, ts, bound_, zdd_, options);
      r.nodes = zdd_.size(root);
      r.cardinality = zdd_.count(root);
      return root;
    });
  }
  return *sup_;
}

NodeRef LowerBoundFilter::filter(NodeRef family) {
  zdd_.check_owned(family);
  NodeRef sup = supersets();
  return run_stage("difference", [&](StageReport& r) {
    NodeRef root = zdd_.subtract(family, sup);
    r.nodes = zdd_.size(root);
    r.cardinality = zdd_.count(root);
    return root;
  });
}

NodeRef filter_lower_bound(NodeRef family, const Graph& g, Weight bound,
                           ZddStore& zdd) {
  LowerBoundFilter filter(g, bound, zdd);
  return filter.filter(family);
}

RatioBound lower_bound_from_ratio(Weight total, std::uint64_t components,
                                  const Rational& ratio) {
  if (total == 0) throw UsageError("total weight must be positive");
  if (components == 0) throw UsageError("component count must be at least 1");
  if (ratio < 1) throw UsageError("ratio must be at least 1");
  RatioBound out;
  out.exact = Rational(total) / (ratio * (components - 1) + 1);
  BigInt q = boost::multiprecision::numerator(out.exact) /
             boost::multiprecision::denominator(out.exact);
  out.floor = q.convert_to<Weight>();
  return out;
}

Rational parse_decimal(std::string_view text) {
  BigInt digits = 0;
  BigInt scale = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      if (seen_point) scale *= 10;
      seen_digit = true;
    } else {
      throw InputError("not a decimal number: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) {
    throw InputError("not a decimal number: '" + std::string(text) + "'");
  }
  return Rational(digits, scale);
}

std::string emit_stats(const std::vector<StageReport>& reports) {
  std::ostringstream out;
  out << "stage time_s nodes cardinality\n";
  for (const auto& r : reports) {
    char seconds[32];
    std::snprintf(seconds, sizeof seconds, "%.3f", r.seconds);
    out << r.stage << ' ' << seconds << ' ' << r.nodes << ' ';
    if (r.cardinality) {
      out << *r.cardinality;
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ddpart
