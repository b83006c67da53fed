#include "minmax/render.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <vector>

namespace minmax {

namespace {

// Machine formats must carry exactly the numbers the text format shows, so
// every double is formatted once and JSON re-parses that fixed string.
std::string format_prob(double q) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", q);
  return buf;
}

double prob_value(double q) { return std::strtod(format_prob(q).c_str(), nullptr); }

const char* dot_shape(NodeKind k) {
  switch (k) {
    case NodeKind::Leaf: return "box";
    case NodeKind::MinRoot: return "circle";
    case NodeKind::MaxRoot: return "doublecircle";
  }
  return "box";
}

}  // namespace

std::string render_ascii(const MinMaxTree& t) {
  std::ostringstream out;
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    const int pos = stack.back();
    stack.pop_back();
    const auto& nd = t.node[static_cast<size_t>(pos)];
    out << std::string(2 * static_cast<size_t>(nd.depth), ' ') << pos << ':'
        << t.entry[static_cast<size_t>(pos)] << " [" << kind_label(nd.kind)
        << "]\n";
    if (nd.right != 0) stack.push_back(nd.right);
    if (nd.left != 0) stack.push_back(nd.left);
  }
  return out.str();
}

std::string export_dot(const MinMaxTree& t) {
  std::ostringstream out;
  out << "digraph minmaxtree {\n";
  for (int pos = 1; pos <= t.n; ++pos) {
    const auto& nd = t.node[static_cast<size_t>(pos)];
    out << "  p" << pos << " [label=\"" << pos << ':'
        << t.entry[static_cast<size_t>(pos)] << "\", shape="
        << dot_shape(nd.kind) << ", class=\"" << kind_name(nd.kind)
        << "\"];\n";
  }
  for (int pos = 1; pos <= t.n; ++pos) {
    const auto& nd = t.node[static_cast<size_t>(pos)];
    if (nd.left != 0)
      out << "  p" << pos << " -> p" << nd.left << " [label=\"l\"];\n";
    if (nd.right != 0)
      out << "  p" << pos << " -> p" << nd.right << " [label=\"r\"];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json tree_to_json(const MinMaxTree& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["variant"] = variant_name(t.variant);
  j["root"] = t.root;
  auto nodes = nlohmann::ordered_json::array();
  for (int pos = 1; pos <= t.n; ++pos) {
    const auto& nd = t.node[static_cast<size_t>(pos)];
    nlohmann::ordered_json node;
    node["pos"] = pos;
    node["entry"] = t.entry[static_cast<size_t>(pos)];
    node["kind"] = kind_name(nd.kind);
    node["parent"] = nd.parent;  // 0 = none
    node["left"] = nd.left;
    node["right"] = nd.right;
    node["span"] = {nd.lo, nd.hi};
    node["depth"] = nd.depth;
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

std::string census_to_text(const CensusTable& t) {
  std::ostringstream out;
  out << "census n=" << t.n << " variant=" << variant_name(t.variant)
      << " total=" << t.total << '\n';
  const int w = static_cast<int>(std::to_string(t.total).size());
  out << std::setw(3) << "i" << ' ' << std::setw(w) << "leaf" << ' '
      << std::setw(w) << "d0" << ' ' << std::setw(w) << "d1" << ' '
      << std::setw(w) << "d2" << '\n';
  for (int i = 1; i <= t.n; ++i) {
    const auto& row = t.d[static_cast<size_t>(i - 1)];
    out << std::setw(3) << i << ' ' << std::setw(w)
        << t.leaf_counts[static_cast<size_t>(i - 1)] << ' ' << std::setw(w)
        << row[0] << ' ' << std::setw(w) << row[1] << ' ' << std::setw(w)
        << row[2] << '\n';
  }
  return out.str();
}

std::string census_to_csv(const CensusTable& t) {
  std::ostringstream out;
  out << "i,leaf,d0,d1,d2\n";
  for (int i = 1; i <= t.n; ++i) {
    const auto& row = t.d[static_cast<size_t>(i - 1)];
    out << i << ',' << t.leaf_counts[static_cast<size_t>(i - 1)] << ','
        << row[0] << ',' << row[1] << ',' << row[2] << '\n';
  }
  return out.str();
}

nlohmann::ordered_json census_to_json(const CensusTable& t) {
  nlohmann::ordered_json j;
  j["n"] = t.n;
  j["variant"] = variant_name(t.variant);
  j["total"] = t.total;
  j["leaf_counts"] = t.leaf_counts;
  auto d = nlohmann::ordered_json::array();
  for (const auto& row : t.d) d.push_back({row[0], row[1], row[2]});
  j["d"] = std::move(d);
  return j;
}

std::string estimate_to_text(const EstimateTable& e) {
  std::ostringstream out;
  out << "sample n=" << e.n << " trials=" << e.trials << " seed=" << e.seed
      << '\n';
  out << std::setw(3) << "i" << ' ' << std::setw(8) << "q_hat" << ' '
      << std::setw(8) << "se" << '\n';
  for (int i = 1; i <= e.n; ++i) {
    out << std::setw(3) << i << ' ' << std::setw(8)
        << format_prob(e.leaf_probability[static_cast<size_t>(i - 1)]) << ' '
        << std::setw(8)
        << format_prob(e.standard_error[static_cast<size_t>(i - 1)]) << '\n';
  }
  return out.str();
}

std::string estimate_to_csv(const EstimateTable& e) {
  std::ostringstream out;
  out << "i,q_hat,se\n";
  for (int i = 1; i <= e.n; ++i)
    out << i << ','
        << format_prob(e.leaf_probability[static_cast<size_t>(i - 1)]) << ','
        << format_prob(e.standard_error[static_cast<size_t>(i - 1)]) << '\n';
  return out.str();
}

nlohmann::ordered_json estimate_to_json(const EstimateTable& e) {
  nlohmann::ordered_json j;
  j["n"] = e.n;
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  auto q = nlohmann::ordered_json::array();
  auto se = nlohmann::ordered_json::array();
  for (int i = 0; i < e.n; ++i) {
    q.push_back(prob_value(e.leaf_probability[static_cast<size_t>(i)]));
    se.push_back(prob_value(e.standard_error[static_cast<size_t>(i)]));
  }
  j["leaf_probability"] = std::move(q);
  j["standard_error"] = std::move(se);
  return j;
}

nlohmann::ordered_json orbit_to_json(const OrbitRecord& o) {
  nlohmann::ordered_json j;
  j["base"] = o.base.to_string();
  j["generators"] = o.generators;
  j["size"] = o.members.size();
  auto members = nlohmann::ordered_json::array();
  for (const auto& m : o.members) members.push_back(m.to_string());
  j["members"] = std::move(members);
  return j;
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream out;
  size_t failed = 0;
  for (const auto& c : r.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ' ' << c.params;
    if (!c.pass) {
      ++failed;
      if (!c.counterexample.empty())
        out << " counterexample: " << c.counterexample;
    }
    out << '\n';
  }
  out << "verify n_max=" << r.n_max << ": " << r.checks.size() << " checks, "
      << (r.checks.size() - failed) << " passed, " << failed << " failed\n";
  return out.str();
}

nlohmann::ordered_json report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["n_max"] = r.n_max;
  j["all_pass"] = r.all_pass();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json check;
    check["name"] = c.name;
    check["params"] = c.params;
    check["pass"] = c.pass;
    check["counterexample"] = c.counterexample;
    checks.push_back(std::move(check));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace minmax
