#include "tss/surface.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tss/error.hpp"

namespace tss {

const Leaf* TssSurface::find_leaf(const std::string& id) const {
  for (const auto& l : leaves) {
    if (l.id == id) return &l;
  }
  return nullptr;
}

const ZeroCurve* TssSurface::find_curve(const std::string& id) const {
  for (const auto& c : curves) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

int TssSurface::incident_curves(const std::string& leaf_id) const {
  int n = 0;
  for (const auto& c : curves) {
    if (c.neg_leaf == leaf_id || c.pos_leaf == leaf_id) ++n;
  }
  return n;
}

const GraphVertex* LabeledGraph::find_vertex(const std::string& id) const {
  for (const auto& v : vertices) {
    if (v.id == id) return &v;
  }
  return nullptr;
}

const GraphEdge* LabeledGraph::find_edge(const std::string& id) const {
  for (const auto& e : edges) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

ValidationReport validate(const TssSurface& s) {
  ValidationReport report;
  auto add = [&report](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };

  std::set<std::string> leaf_ids;
  for (const auto& l : s.leaves) {
    if (!leaf_ids.insert(l.id).second) add("duplicate-leaf-id", "leaf id repeated: " + l.id);
  }
  std::set<std::string> curve_ids;
  for (const auto& c : s.curves) {
    if (!curve_ids.insert(c.id).second) add("duplicate-curve-id", "curve id repeated: " + c.id);
  }

  if (s.curves.empty()) add("no-zero-curve", "a TSS has at least one zero curve");

  for (const auto& c : s.curves) {
    if (c.period.sign() <= 0) {
      add("non-positive-period", "curve " + c.id + " has period " + c.period.str());
    }
    if (c.neg_leaf == c.pos_leaf) {
      add("curve-bounds-same-leaf",
          "curve " + c.id + " has the same leaf on both sides (sign must flip)");
    }
    for (const std::string* ref : {&c.neg_leaf, &c.pos_leaf}) {
      if (!leaf_ids.count(*ref)) {
        add("dangling-leaf-reference", "curve " + c.id + " references missing leaf " + *ref);
      }
    }
    const Leaf* neg = s.find_leaf(c.neg_leaf);
    const Leaf* pos = s.find_leaf(c.pos_leaf);
    if (neg && neg->sign != -1) {
      add("sign-bipartiteness", "curve " + c.id + " has neg side on a leaf of sign +1");
    }
    if (pos && pos->sign != +1) {
      add("sign-bipartiteness", "curve " + c.id + " has pos side on a leaf of sign -1");
    }
  }

  for (const auto& l : s.leaves) {
    if (l.genus < 0) add("negative-genus", "leaf " + l.id);
    if (l.free_boundary < 0) add("negative-free-boundary", "leaf " + l.id);
    if (l.sign != +1 && l.sign != -1) add("bad-sign", "leaf " + l.id);
    if (l.volume.is_zero() || l.volume.sign() != l.sign) {
      add("volume-sign", "leaf " + l.id + " has volume " + l.volume.str() +
                             " inconsistent with sign " + (l.sign > 0 ? std::string("+1") : std::string("-1")));
    }
    if (s.closed && l.free_boundary != 0) {
      add("free-boundary-on-closed", "leaf " + l.id + " has free boundary but the surface is closed");
    }
    if (s.incident_curves(l.id) == 0 && l.free_boundary == 0) {
      add("isolated-leaf", "leaf " + l.id + " touches no zero curve and has no free boundary");
    }
  }

  // Euler parity. b_j counts incident curve endpoints plus free boundary.
  long chi = 0;
  for (const auto& l : s.leaves) {
    chi += 2 - 2 * static_cast<long>(l.genus) -
           (s.incident_curves(l.id) + static_cast<long>(l.free_boundary));
  }
  if (chi % 2 != 0) {
    add("euler-parity", "sum of leaf Euler characteristics is odd: " + std::to_string(chi));
  }

  // Connectedness of the leaf/curve incidence graph.
  if (!s.leaves.empty()) {
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& c : s.curves) {
      if (leaf_ids.count(c.neg_leaf) && leaf_ids.count(c.pos_leaf) && c.neg_leaf != c.pos_leaf) {
        adj[c.neg_leaf].push_back(c.pos_leaf);
        adj[c.pos_leaf].push_back(c.neg_leaf);
      }
    }
    std::set<std::string> seen;
    std::vector<std::string> stack{s.leaves.front().id};
    while (!stack.empty()) {
      std::string v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      for (const auto& w : adj[v]) stack.push_back(w);
    }
    if (seen.size() != s.leaves.size()) {
      add("disconnected", "leaf/curve incidence graph is not connected");
    }
  } else {
    add("no-leaves", "a TSS has at least one leaf");
  }

  return report;
}

void require_valid(const TssSurface& s) {
  ValidationReport report = validate(s);
  if (report.valid()) return;
  std::ostringstream oss;
  oss << "invalid surface:";
  for (const auto& v : report.violations) oss << " [" << v.code << "] " << v.message << ";";
  throw InvalidSurfaceError(oss.str());
}

long euler_characteristic(const TssSurface& s) {
  require_valid(s);
  long chi = 0;
  for (const auto& l : s.leaves) {
    chi += 2 - 2 * static_cast<long>(l.genus) -
           (s.incident_curves(l.id) + static_cast<long>(l.free_boundary));
  }
  return chi;
}

LabeledGraph build_graph(const TssSurface& s) {
  require_valid(s);
  LabeledGraph g;
  g.vertices.reserve(s.leaves.size());
  for (const auto& l : s.leaves) g.vertices.push_back({l.id, l.genus, l.sign});
  g.edges.reserve(s.curves.size());
  for (const auto& c : s.curves) g.edges.push_back({c.id, c.neg_leaf, c.pos_leaf, c.period});
  return g;
}

}  // namespace tss
