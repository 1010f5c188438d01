#include "tss/picard.hpp"

#include <algorithm>
#include <sstream>

#include "tss/error.hpp"

namespace tss {

namespace {

SurfaceType leaf_type(const TssSurface& s, const Leaf& l) {
  return {l.genus, s.incident_curves(l.id), l.free_boundary};
}

// Twist-lattice canonical form per leaf. The stored vector is indexed by the
// incident curves; the group it represents is the D(boundary) part of the
// leaf's mapping class group:
//   disc (0,1,0) and half-open cylinder (0,1,1): the boundary twist is
//     isotopically trivial, the vector reduces to zero;
//   annulus (0,2,0): the two boundary twists coincide, the total lands in
//     the first slot;
//   all other cataloged types: the twists are independent, no reduction.
void canonicalize_twists(const PicardGroupDescription& d, PicardElement& e) {
  for (auto& [leaf_id, vec] : e.twists) {
    const SurfaceType& t = d.type_of(leaf_id);
    if (t.genus == 0 && t.fixed_boundary == 1) {
      for (auto& [curve, k] : vec) k = 0;
    } else if (t.genus == 0 && t.fixed_boundary == 2 && t.free_boundary == 0) {
      long long total = 0;
      for (auto& [curve, k] : vec) {
        total += k;
        k = 0;
      }
      if (!vec.empty()) vec.begin()->second = total;
    }
  }
}

void reduce_angles(const PicardGroupDescription& d, PicardElement& e) {
  for (auto& [curve, angle] : e.angles) angle = angle.mod(d.period_of(curve));
}

// Transport of the normal-part data by a graph automorphism: indices move
// through the vertex/edge maps; a global reversal negates twist integers and
// inverts each PMod letter, but leaves angles alone.
PicardElement transport(const PicardGroupDescription& d, const GraphMap& m,
                        const PicardElement& e) {
  PicardElement out = identity_element(d);
  for (const auto& [curve, angle] : e.angles) out.angles[m.edge_image(curve)] = angle;
  for (const auto& [leaf, vec] : e.twists) {
    auto& dst = out.twists[m.vertex_image(leaf)];
    for (const auto& [curve, k] : vec) {
      dst[m.edge_image(curve)] = m.global_reversal ? -k : k;
    }
  }
  for (const auto& [leaf, w] : e.pmod_words) {
    out.pmod_words[m.vertex_image(leaf)] = m.global_reversal ? w.invert_letters() : w;
  }
  canonicalize_twists(d, out);
  return out;
}

}  // namespace

const Rational& PicardGroupDescription::period_of(const std::string& curve_id) const {
  auto it = torus_factors.find(curve_id);
  if (it == torus_factors.end()) throw DomainError("unknown curve id: " + curve_id);
  return it->second;
}

const SurfaceType& PicardGroupDescription::type_of(const std::string& leaf_id) const {
  auto it = leaf_types.find(leaf_id);
  if (it == leaf_types.end()) throw DomainError("unknown leaf id: " + leaf_id);
  return it->second;
}

std::vector<std::string> PicardGroupDescription::twist_slots(const std::string& leaf_id) const {
  std::vector<std::string> slots;
  for (const auto& c : surface.curves) {
    if (c.neg_leaf == leaf_id || c.pos_leaf == leaf_id) slots.push_back(c.id);
  }
  std::sort(slots.begin(), slots.end());
  return slots;
}

std::string PicardGroupDescription::pretty() const {
  std::vector<GroupAtom> normal;
  for (const auto& [curve, period] : torus_factors) normal.push_back(GroupAtom::torus(period));
  GroupDescription leaves;
  for (const auto& [leaf, desc] : leaf_factors) leaves = leaves.direct_product(desc);
  for (const auto& a : leaves.atoms()) normal.push_back(a);

  std::ostringstream oss;
  oss << "(";
  if (normal.empty()) oss << "1";
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (i) oss << " x ";
    oss << normal[i].pretty();
  }
  oss << ")";
  if (outer.order() == 1) return oss.str();
  if (outer.order() == 2) {
    oss << " x| Z2";
  } else {
    oss << " x| G[" << outer.order() << "]";
  }
  return oss.str();
}

PicardGroupDescription picard_group(const TssSurface& s, int size_guard) {
  require_valid(s);
  PicardGroupDescription d;
  d.surface = s;
  d.graph = build_graph(s);
  for (const auto& c : s.curves) d.torus_factors.emplace(c.id, c.period);
  for (const auto& l : s.leaves) {
    SurfaceType t = leaf_type(s, l);
    d.leaf_types.emplace(l.id, t);
    d.leaf_factors.emplace(l.id, mcg_structure(t));  // throws when uncataloged
  }
  d.outer = automorphism_group(d.graph, size_guard);

  // The semidirect action moves leaf data along the vertex maps, which is
  // only meaningful between leaves of the same topological type. The graph
  // does not record free boundary, so check it here.
  for (const auto& m : d.outer.elements) {
    for (const auto& l : s.leaves) {
      if (!(d.type_of(m.vertex_image(l.id)) == d.type_of(l.id))) {
        throw DomainError("graph automorphism identifies leaves of different type (" + l.id +
                          " vs " + m.vertex_image(l.id) + "); Picard description undefined");
      }
    }
  }

  std::ostringstream note;
  note << "G permutes torus factors by the edge maps and leaf factors by the vertex maps; "
          "orientation-reversing automorphisms invert boundary twists and PMod generators "
          "and leave modular-flow angles unchanged";
  d.action_note = note.str();
  return d;
}

GroupDescription static_picard(const TssSurface& s) {
  require_valid(s);
  GroupDescription out;
  for (const auto& l : s.leaves) out = out.direct_product(mcg_structure(leaf_type(s, l)));
  return out;
}

PicardElement identity_element(const PicardGroupDescription& d) {
  PicardElement e;
  e.outer_part = GraphMap::identity(d.graph);
  for (const auto& [curve, period] : d.torus_factors) e.angles[curve] = Rational(0);
  for (const auto& l : d.surface.leaves) {
    auto& vec = e.twists[l.id];
    for (const auto& slot : d.twist_slots(l.id)) vec[slot] = 0;
    e.pmod_words[l.id] = FreeWord();
  }
  return e;
}

PicardElement from_modular_flow(const PicardGroupDescription& d, const std::string& curve,
                                const Rational& t) {
  PicardElement e = identity_element(d);
  e.angles.at(curve) = t.mod(d.period_of(curve));
  return e;
}

PicardElement from_boundary_twist(const PicardGroupDescription& d, const std::string& leaf,
                                  const std::string& curve, long long k) {
  PicardElement e = identity_element(d);
  auto leaf_it = e.twists.find(leaf);
  if (leaf_it == e.twists.end()) throw DomainError("unknown leaf id: " + leaf);
  auto slot_it = leaf_it->second.find(curve);
  if (slot_it == leaf_it->second.end()) {
    throw DomainError("curve " + curve + " is not incident to leaf " + leaf);
  }
  slot_it->second = k;
  canonicalize_twists(d, e);
  return e;
}

PicardElement from_graph_automorphism(const PicardGroupDescription& d, const GraphMap& m) {
  if (!d.outer.contains(m)) {
    throw DomainError("map is not an automorphism of the surface's labeled graph");
  }
  PicardElement e = identity_element(d);
  e.outer_part = m;
  return e;
}

PicardElement from_pmod_word(const PicardGroupDescription& d, const std::string& leaf,
                             const FreeWord& w) {
  PicardElement e = identity_element(d);
  auto it = e.pmod_words.find(leaf);
  if (it == e.pmod_words.end()) throw DomainError("unknown leaf id: " + leaf);
  const auto gens = pmod_generators(d.type_of(leaf));
  for (const Letter& l : w.letters()) {
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= gens.size()) {
      throw DomainError("pmod word uses generator " + std::to_string(l.generator) +
                        " outside the generating set of leaf " + leaf);
    }
  }
  it->second = w;
  return e;
}

PicardElement compose(const PicardGroupDescription& d, const PicardElement& a,
                      const PicardElement& b) {
  check_element(d, a);
  check_element(d, b);
  PicardElement tb = transport(d, a.outer_part, b);
  PicardElement out;
  out.outer_part = a.outer_part.compose(b.outer_part);
  for (const auto& [curve, angle] : a.angles) out.angles[curve] = angle + tb.angles.at(curve);
  for (const auto& [leaf, vec] : a.twists) {
    auto& dst = out.twists[leaf];
    for (const auto& [curve, k] : vec) dst[curve] = k + tb.twists.at(leaf).at(curve);
  }
  for (const auto& [leaf, w] : a.pmod_words) {
    out.pmod_words[leaf] = w * tb.pmod_words.at(leaf);
  }
  reduce_angles(d, out);
  canonicalize_twists(d, out);
  return out;
}

PicardElement invert(const PicardGroupDescription& d, const PicardElement& a) {
  check_element(d, a);
  GraphMap inv = a.outer_part.inverse();
  PicardElement negated;
  negated.outer_part = a.outer_part;  // placeholder, transport only uses data
  for (const auto& [curve, angle] : a.angles) negated.angles[curve] = -angle;
  for (const auto& [leaf, vec] : a.twists) {
    auto& dst = negated.twists[leaf];
    for (const auto& [curve, k] : vec) dst[curve] = -k;
  }
  for (const auto& [leaf, w] : a.pmod_words) negated.pmod_words[leaf] = w.inverse();
  PicardElement out = transport(d, inv, negated);
  out.outer_part = inv;
  reduce_angles(d, out);
  canonicalize_twists(d, out);
  return out;
}

EqualityVerdict elements_equal(const PicardGroupDescription& d, const PicardElement& a,
                               const PicardElement& b) {
  check_element(d, a);
  check_element(d, b);
  if (!(a.outer_part == b.outer_part)) return {Verdict::Distinct, "outer parts differ"};
  for (const auto& [curve, angle] : a.angles) {
    if (angle != b.angles.at(curve)) {
      return {Verdict::Distinct, "angles differ on curve " + curve};
    }
  }
  for (const auto& [leaf, vec] : a.twists) {
    if (vec != b.twists.at(leaf)) return {Verdict::Distinct, "twists differ on leaf " + leaf};
  }
  bool all_words_equal = true;
  for (const auto& [leaf, w] : a.pmod_words) {
    if (w == b.pmod_words.at(leaf)) continue;
    all_words_equal = false;
    if (!(pmod_word_action(w, d.type_of(leaf)) ==
          pmod_word_action(b.pmod_words.at(leaf), d.type_of(leaf)))) {
      return {Verdict::Distinct, "homology actions differ on leaf " + leaf};
    }
  }
  if (all_words_equal) return {Verdict::Equal, ""};
  return {Verdict::Unknown, "PMod words differ syntactically but act identically on homology"};
}

GraphMap leaf_space_image(const PicardGroupDescription& d, const PicardElement& a) {
  check_element(d, a);
  return a.outer_part;
}

bool is_static(const PicardGroupDescription& d, const PicardElement& a) {
  check_element(d, a);
  if (!a.outer_part.is_identity()) return false;
  for (const auto& [curve, angle] : a.angles) {
    if (!angle.is_zero()) return false;
  }
  return true;
}

void check_element(const PicardGroupDescription& d, const PicardElement& a) {
  if (a.angles.size() != d.torus_factors.size()) {
    throw DomainError("element angle map does not cover the curves");
  }
  for (const auto& [curve, angle] : a.angles) {
    const Rational& period = d.period_of(curve);
    if (angle.sign() < 0 || angle >= period) {
      throw DomainError("angle on curve " + curve + " not reduced mod its period");
    }
  }
  if (a.twists.size() != d.leaf_factors.size() || a.pmod_words.size() != d.leaf_factors.size()) {
    throw DomainError("element leaf maps do not cover the leaves");
  }
  for (const auto& [leaf, vec] : a.twists) {
    const auto slots = d.twist_slots(leaf);
    if (vec.size() != slots.size()) {
      throw DomainError("twist vector length mismatch on leaf " + leaf);
    }
    for (const auto& slot : slots) {
      if (!vec.count(slot)) throw DomainError("twist vector missing slot " + slot);
    }
  }
  for (const auto& [leaf, w] : a.pmod_words) {
    const auto gens = pmod_generators(d.type_of(leaf));
    for (const Letter& l : w.letters()) {
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= gens.size()) {
        throw DomainError("pmod word generator out of range on leaf " + leaf);
      }
    }
  }
  if (!d.outer.contains(a.outer_part)) {
    throw DomainError("element outer part is not in the automorphism group");
  }
}

}  // namespace tss
