#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tss/surface.hpp"

namespace tss {

/// A label-preserving isomorphism between two labeled graphs. When
/// global_reversal is set the map flips every vertex sign and reverses every
/// edge orientation simultaneously (the combinatorial shadow of an
/// orientation-reversing diffeomorphism of the surface).
struct GraphMap {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, std::string> edge_map;
  bool global_reversal = false;

  bool operator==(const GraphMap&) const = default;
  bool operator<(const GraphMap& o) const {
    if (global_reversal != o.global_reversal) return global_reversal < o.global_reversal;
    if (vertex_map != o.vertex_map) return vertex_map < o.vertex_map;
    return edge_map < o.edge_map;
  }

  bool is_identity() const;
  static GraphMap identity(const LabeledGraph& g);

  /// Composition: first apply `other`, then *this. Both must act on
  /// compatible vertex/edge id sets.
  GraphMap compose(const GraphMap& other) const;
  GraphMap inverse() const;

  const std::string& vertex_image(const std::string& id) const;
  const std::string& edge_image(const std::string& id) const;
};

/// Checks that m really is a label-preserving isomorphism from g1 to g2
/// (incidence, genus labels, period labels, reversal consistency).
bool is_isomorphism(const LabeledGraph& g1, const LabeledGraph& g2, const GraphMap& m);

struct AutomorphismGroup {
  std::vector<GraphMap> elements;   // closed under composition and inverse
  std::vector<GraphMap> generators; // a generating sublist

  std::size_t order() const { return elements.size(); }
  bool contains(const GraphMap& m) const;
};

inline constexpr int kDefaultSizeGuard = 12;

/// Exhaustive list of label-preserving isomorphisms g1 -> g2, by brute-force
/// search with sign/genus/degree pre-partitioning. When allow_reversal is set
/// the sign-flipping, orientation-reversing maps are searched as well.
/// Throws SizeGuardError when either graph has more than `size_guard`
/// vertices.
std::vector<GraphMap> graph_isomorphisms(const LabeledGraph& g1, const LabeledGraph& g2,
                                         bool allow_reversal, int size_guard = kDefaultSizeGuard);

/// All label-preserving automorphisms of g, reversals included, packaged with
/// a closure check and a generating sublist.
AutomorphismGroup automorphism_group(const LabeledGraph& g, int size_guard = kDefaultSizeGuard);

struct DecisionWitness {
  bool equivalent = false;
  std::optional<GraphMap> witness;
};

/// Morita equivalence: the oriented labeled graphs must match, so reversals
/// are not admitted.
DecisionWitness morita_equivalent(const TssSurface& s1, const TssSurface& s2,
                                  int size_guard = kDefaultSizeGuard);

/// Classification up to orientation-preserving Poisson diffeomorphism:
/// orientation-preserving graph isomorphism plus equality of the total
/// regularized volume. With strict_volumes the witness must also match
/// per-leaf volumes.
DecisionWitness isomorphic_tss(const TssSurface& s1, const TssSurface& s2,
                               bool strict_volumes = false,
                               int size_guard = kDefaultSizeGuard);

/// A string equal for two graphs iff they are isomorphic without reversal;
/// the serialized form minimized over admissible vertex orderings.
std::string canonical_key(const LabeledGraph& g, int size_guard = kDefaultSizeGuard);

}  // namespace tss
