#include "tss/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "tss/error.hpp"

namespace tss {

namespace {

constexpr std::size_t kMaxIsomorphisms = 100000;
constexpr std::size_t kMaxKeyOrderings = 2000000;

std::string vertex_label(const GraphVertex& v, bool flip_sign) {
  int sign = flip_sign ? -v.sign : v.sign;
  return (sign > 0 ? "+" : "-") + std::string("g") + std::to_string(v.genus);
}

// Periods (as canonical strings) of the edges tail -> head.
std::vector<std::string> periods_between(const LabeledGraph& g, const std::string& tail,
                                         const std::string& head) {
  std::vector<std::string> out;
  for (const auto& e : g.edges) {
    if (e.tail == tail && e.head == head) out.push_back(e.period.str());
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct VertexSignature {
  std::string label;
  std::vector<std::string> out_periods;
  std::vector<std::string> in_periods;

  bool operator==(const VertexSignature&) const = default;
};

VertexSignature signature(const LabeledGraph& g, const GraphVertex& v, bool reversed) {
  VertexSignature sig;
  sig.label = vertex_label(v, reversed);
  for (const auto& e : g.edges) {
    if (e.tail == v.id) sig.out_periods.push_back(e.period.str());
    if (e.head == v.id) sig.in_periods.push_back(e.period.str());
  }
  std::sort(sig.out_periods.begin(), sig.out_periods.end());
  std::sort(sig.in_periods.begin(), sig.in_periods.end());
  if (reversed) std::swap(sig.out_periods, sig.in_periods);
  return sig;
}

// Enumerates, via backtracking over vertices and then over parallel-edge
// classes, every isomorphism for a fixed reversal flag.
void search_isomorphisms(const LabeledGraph& g1, const LabeledGraph& g2, bool reversed,
                         std::vector<GraphMap>& out) {
  const std::size_t n = g1.vertices.size();
  if (n != g2.vertices.size() || g1.edges.size() != g2.edges.size()) return;

  // Candidate g2 vertices per g1 vertex, filtered by signature.
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    VertexSignature want = signature(g1, g1.vertices[i], reversed);
    for (std::size_t j = 0; j < g2.vertices.size(); ++j) {
      if (want == signature(g2, g2.vertices[j], false)) candidates[i].push_back(j);
    }
    if (candidates[i].empty()) return;
  }

  std::vector<std::size_t> assign(n, SIZE_MAX);
  std::vector<bool> used(n, false);

  auto pair_consistent = [&](std::size_t i, std::size_t j) {
    // Edges between g1.vertices[i] and every already-assigned vertex must
    // match the corresponding edges in g2 (direction swapped under reversal).
    for (std::size_t k = 0; k < n; ++k) {
      if (assign[k] == SIZE_MAX || k == i) continue;
      const std::string& a1 = g1.vertices[i].id;
      const std::string& b1 = g1.vertices[k].id;
      const std::string& a2 = g2.vertices[j].id;
      const std::string& b2 = g2.vertices[assign[k]].id;
      auto fwd1 = periods_between(g1, a1, b1);
      auto bwd1 = periods_between(g1, b1, a1);
      auto fwd2 = reversed ? periods_between(g2, b2, a2) : periods_between(g2, a2, b2);
      auto bwd2 = reversed ? periods_between(g2, a2, b2) : periods_between(g2, b2, a2);
      if (fwd1 != fwd2 || bwd1 != bwd2) return false;
    }
    return true;
  };

  // For a complete vertex bijection, enumerate all consistent edge bijections
  // (free permutations within each parallel class of equal-period edges).
  auto emit_edge_maps = [&]() {
    std::map<std::string, std::string> vmap;
    for (std::size_t i = 0; i < n; ++i) vmap[g1.vertices[i].id] = g2.vertices[assign[i]].id;

    // Group g1 edges by their required image class.
    std::map<std::string, std::vector<std::string>> classes1;  // key -> g1 edge ids
    for (const auto& e : g1.edges) {
      std::string t = vmap.at(e.tail);
      std::string h = vmap.at(e.head);
      if (reversed) std::swap(t, h);
      classes1[t + "\x01" + h + "\x01" + e.period.str()].push_back(e.id);
    }
    std::map<std::string, std::vector<std::string>> classes2;  // key -> g2 edge ids
    for (const auto& e : g2.edges) {
      classes2[e.tail + "\x01" + e.head + "\x01" + e.period.str()].push_back(e.id);
    }
    for (const auto& [key, ids] : classes1) {
      auto it = classes2.find(key);
      if (it == classes2.end() || it->second.size() != ids.size()) return;  // no match
    }

    std::vector<std::pair<const std::vector<std::string>*, std::vector<std::string>>> groups;
    for (auto& [key, ids] : classes1) {
      auto targets = classes2.at(key);
      std::sort(targets.begin(), targets.end());
      groups.emplace_back(&ids, std::move(targets));
    }

    GraphMap base;
    base.vertex_map = vmap;
    base.global_reversal = reversed;
    std::function<void(std::size_t, GraphMap&)> rec = [&](std::size_t gi, GraphMap& m) {
      if (gi == groups.size()) {
        if (out.size() >= kMaxIsomorphisms) {
          throw SizeGuardError("isomorphism enumeration exceeded " +
                               std::to_string(kMaxIsomorphisms) + " maps");
        }
        out.push_back(m);
        return;
      }
      auto& [src, targets] = groups[gi];
      std::vector<std::string> perm = targets;
      do {
        for (std::size_t t = 0; t < src->size(); ++t) m.edge_map[(*src)[t]] = perm[t];
        rec(gi + 1, m);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(0, base);
  };

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == n) {
      emit_edge_maps();
      return;
    }
    for (std::size_t j : candidates[i]) {
      if (used[j] || !pair_consistent(i, j)) continue;
      assign[i] = j;
      used[j] = true;
      place(i + 1);
      assign[i] = SIZE_MAX;
      used[j] = false;
    }
  };
  place(0);
}

}  // namespace

bool GraphMap::is_identity() const {
  if (global_reversal) return false;
  for (const auto& [a, b] : vertex_map) {
    if (a != b) return false;
  }
  for (const auto& [a, b] : edge_map) {
    if (a != b) return false;
  }
  return true;
}

GraphMap GraphMap::identity(const LabeledGraph& g) {
  GraphMap m;
  for (const auto& v : g.vertices) m.vertex_map[v.id] = v.id;
  for (const auto& e : g.edges) m.edge_map[e.id] = e.id;
  return m;
}

GraphMap GraphMap::compose(const GraphMap& other) const {
  GraphMap m;
  for (const auto& [a, b] : other.vertex_map) m.vertex_map[a] = vertex_image(b);
  for (const auto& [a, b] : other.edge_map) m.edge_map[a] = edge_image(b);
  m.global_reversal = global_reversal != other.global_reversal;
  return m;
}

GraphMap GraphMap::inverse() const {
  GraphMap m;
  for (const auto& [a, b] : vertex_map) m.vertex_map[b] = a;
  for (const auto& [a, b] : edge_map) m.edge_map[b] = a;
  m.global_reversal = global_reversal;
  return m;
}

const std::string& GraphMap::vertex_image(const std::string& id) const {
  auto it = vertex_map.find(id);
  if (it == vertex_map.end()) throw DomainError("graph map: unknown vertex id " + id);
  return it->second;
}

const std::string& GraphMap::edge_image(const std::string& id) const {
  auto it = edge_map.find(id);
  if (it == edge_map.end()) throw DomainError("graph map: unknown edge id " + id);
  return it->second;
}

bool is_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const GraphMap& m) {
  if (m.vertex_map.size() != g1.vertices.size() || m.edge_map.size() != g1.edges.size())
    return false;
  if (g1.vertices.size() != g2.vertices.size() || g1.edges.size() != g2.edges.size())
    return false;
  std::set<std::string> vimages, eimages;
  for (const auto& v : g1.vertices) {
    auto it = m.vertex_map.find(v.id);
    if (it == m.vertex_map.end()) return false;
    const GraphVertex* w = g2.find_vertex(it->second);
    if (!w || !vimages.insert(w->id).second) return false;
    if (w->genus != v.genus) return false;
    if (w->sign != (m.global_reversal ? -v.sign : v.sign)) return false;
  }
  for (const auto& e : g1.edges) {
    auto it = m.edge_map.find(e.id);
    if (it == m.edge_map.end()) return false;
    const GraphEdge* f = g2.find_edge(it->second);
    if (!f || !eimages.insert(f->id).second) return false;
    if (f->period != e.period) return false;
    const std::string& t = m.vertex_map.at(e.tail);
    const std::string& h = m.vertex_map.at(e.head);
    if (!m.global_reversal && (f->tail != t || f->head != h)) return false;
    if (m.global_reversal && (f->tail != h || f->head != t)) return false;
  }
  return true;
}

bool AutomorphismGroup::contains(const GraphMap& m) const {
  return std::find(elements.begin(), elements.end(), m) != elements.end();
}

std::vector<GraphMap> graph_isomorphisms(const LabeledGraph& g1, const LabeledGraph& g2,
                                         bool allow_reversal, int size_guard) {
  if (g1.vertices.size() > static_cast<std::size_t>(size_guard) ||
      g2.vertices.size() > static_cast<std::size_t>(size_guard)) {
    throw SizeGuardError("graph has more than " + std::to_string(size_guard) +
                         " vertices; brute-force search refused");
  }
  std::vector<GraphMap> out;
  search_isomorphisms(g1, g2, false, out);
  if (allow_reversal) search_isomorphisms(g1, g2, true, out);
  for (const auto& m : out) {
    if (!is_isomorphism(g1, g2, m)) throw Error("internal: search produced a non-isomorphism");
  }
  return out;
}

AutomorphismGroup automorphism_group(const LabeledGraph& g, int size_guard) {
  AutomorphismGroup grp;
  grp.elements = graph_isomorphisms(g, g, true, size_guard);
  std::sort(grp.elements.begin(), grp.elements.end());

  // Closure check: the search is exhaustive, so products must be listed.
  for (const auto& a : grp.elements) {
    for (const auto& b : grp.elements) {
      if (!grp.contains(a.compose(b))) {
        throw Error("internal: automorphism list not closed under composition");
      }
    }
    if (!grp.contains(a.inverse())) {
      throw Error("internal: automorphism list not closed under inverse");
    }
  }

  // Greedy generating sublist.
  GraphMap id = GraphMap::identity(g);
  std::set<GraphMap> generated{id};
  for (const auto& m : grp.elements) {
    if (generated.count(m)) continue;
    grp.generators.push_back(m);
    // Re-close.
    std::vector<GraphMap> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<GraphMap> next;
      for (const auto& x : frontier) {
        for (const auto& gen : grp.generators) {
          for (const GraphMap& y : {x.compose(gen), gen.compose(x)}) {
            if (generated.insert(y).second) next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return grp;
}

DecisionWitness morita_equivalent(const TssSurface& s1, const TssSurface& s2, int size_guard) {
  auto isos = graph_isomorphisms(build_graph(s1), build_graph(s2), false, size_guard);
  if (isos.empty()) return {false, std::nullopt};
  return {true, isos.front()};
}

DecisionWitness isomorphic_tss(const TssSurface& s1, const TssSurface& s2, bool strict_volumes,
                               int size_guard) {
  auto isos = graph_isomorphisms(build_graph(s1), build_graph(s2), false, size_guard);
  if (isos.empty()) return {false, std::nullopt};
  if (!strict_volumes) {
    Rational total1, total2;
    for (const auto& l : s1.leaves) total1 += l.volume;
    for (const auto& l : s2.leaves) total2 += l.volume;
    if (total1 != total2) return {false, std::nullopt};
    return {true, isos.front()};
  }
  for (const auto& m : isos) {
    bool ok = true;
    for (const auto& l : s1.leaves) {
      const Leaf* img = s2.find_leaf(m.vertex_image(l.id));
      if (!img || img->volume != l.volume) {
        ok = false;
        break;
      }
    }
    if (ok) return {true, m};
  }
  return {false, std::nullopt};
}

std::string canonical_key(const LabeledGraph& g, int size_guard) {
  const std::size_t n = g.vertices.size();
  if (n > static_cast<std::size_t>(size_guard)) {
    throw SizeGuardError("graph has more than " + std::to_string(size_guard) +
                         " vertices; canonical key refused");
  }

  // Vertex labels are serialized first, so a minimizing ordering sorts the
  // vertices by label; only permutations within equal-label classes matter.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertex_label(g.vertices[a], false) < vertex_label(g.vertices[b], false);
  });

  std::string best;
  std::size_t visited = 0;
  auto serialize = [&]() {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::map<std::string, std::size_t> vertex_pos;
    for (std::size_t i = 0; i < n; ++i) vertex_pos[g.vertices[i].id] = pos[i];
    std::ostringstream oss;
    for (std::size_t i = 0; i < n; ++i) oss << vertex_label(g.vertices[order[i]], false) << ";";
    std::vector<std::string> edge_strs;
    for (const auto& e : g.edges) {
      std::ostringstream es;
      es << vertex_pos.at(e.tail) << ">" << vertex_pos.at(e.head) << ":" << e.period.str();
      edge_strs.push_back(es.str());
    }
    std::sort(edge_strs.begin(), edge_strs.end());
    oss << "|";
    for (const auto& s : edge_strs) oss << s << ";";
    return oss.str();
  };

  // Enumerate permutations within label classes.
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (start >= n) {
      if (++visited > kMaxKeyOrderings) {
        throw SizeGuardError("canonical key: too many orderings to enumerate");
      }
      std::string s = serialize();
      if (best.empty() || s < best) best = s;
      return;
    }
    std::size_t end = start;
    while (end < n && vertex_label(g.vertices[order[end]], false) ==
                          vertex_label(g.vertices[order[start]], false)) {
      ++end;
    }
    std::vector<std::size_t> block(order.begin() + start, order.begin() + end);
    std::sort(block.begin(), block.end());
    do {
      std::copy(block.begin(), block.end(), order.begin() + start);
      rec(end);
    } while (std::next_permutation(block.begin(), block.end()));
    std::sort(order.begin() + start, order.begin() + end);
  };
  if (n == 0) return "|";
  rec(0);
  return best;
}

}  // namespace tss
