#pragma once

#include <map>
#include <string>

#include "tss/free_word.hpp"
#include "tss/graph.hpp"
#include "tss/group_desc.hpp"
#include "tss/homology.hpp"
#include "tss/mcg.hpp"
#include "tss/rational.hpp"
#include "tss/surface.hpp"

namespace tss {

/// Structured value of the Picard group of a TSS:
///
///   Pic = ( prod over curves of T_period  x  prod over leaves of M(leaf) )
///         semidirect  G,
///
/// where G is the label-preserving automorphism group of the labeled graph.
/// G acts by permuting the factor indices through its vertex and edge maps;
/// an orientation-reversing automorphism additionally inverts boundary twists
/// and PMod generators, while modular-flow angles are never negated (the
/// modular field restriction is preserved, not flipped).
struct PicardGroupDescription {
  TssSurface surface;
  LabeledGraph graph;
  std::map<std::string, Rational> torus_factors;         // curve id -> period
  std::map<std::string, GroupDescription> leaf_factors;  // leaf id -> M(leaf)
  std::map<std::string, SurfaceType> leaf_types;         // leaf id -> (g, fixed, free)
  AutomorphismGroup outer;
  std::string action_note;

  const Rational& period_of(const std::string& curve_id) const;
  const SurfaceType& type_of(const std::string& leaf_id) const;
  /// Incident curves of a leaf, sorted by id (the twist-vector slots).
  std::vector<std::string> twist_slots(const std::string& leaf_id) const;

  /// e.g. "(T_{44/7}) x| Z2" for the one-curve cylinder.
  std::string pretty() const;
};

/// A concrete element of the Picard group. All maps are total: every curve
/// has an angle (reduced mod its period), every leaf has a twist vector over
/// its incident curves and a freely reduced PMod word. Twist vectors are
/// stored in the canonical form of the leaf's mapping class group: on an
/// annulus leaf the two boundary twists coincide, on a disc or half-open
/// cylinder leaf they vanish.
struct PicardElement {
  GraphMap outer_part;
  std::map<std::string, Rational> angles;
  std::map<std::string, std::map<std::string, long long>> twists;
  std::map<std::string, FreeWord> pmod_words;

  bool operator==(const PicardElement&) const = default;
};

enum class Verdict { Equal, Distinct, Unknown };

/// Equal and Distinct are certified by exact data; Unknown occurs only when
/// PMod words differ syntactically but act identically on homology.
struct EqualityVerdict {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
};

/// Builds the Picard group description. Throws UncatalogedError when a leaf
/// is outside the mapping class group catalog, SizeGuardError from the
/// automorphism search, DomainError when a graph automorphism identifies
/// leaves of different topological type (so the semidirect action would be
/// ill-defined).
PicardGroupDescription picard_group(const TssSurface& s, int size_guard = kDefaultSizeGuard);

/// The static Picard group: product over leaves of M(leaf).
GroupDescription static_picard(const TssSurface& s);

PicardElement identity_element(const PicardGroupDescription& d);
/// Translation by time t of the modular flow around `curve`; t reduces mod
/// the curve's period.
PicardElement from_modular_flow(const PicardGroupDescription& d, const std::string& curve,
                                const Rational& t);
/// k-fold boundary Dehn twist of `leaf` along its end at `curve`.
PicardElement from_boundary_twist(const PicardGroupDescription& d, const std::string& leaf,
                                  const std::string& curve, long long k);
PicardElement from_graph_automorphism(const PicardGroupDescription& d, const GraphMap& m);
/// A word in the symbolic PMod generators of `leaf`.
PicardElement from_pmod_word(const PicardGroupDescription& d, const std::string& leaf,
                             const FreeWord& w);

PicardElement compose(const PicardGroupDescription& d, const PicardElement& a,
                      const PicardElement& b);
PicardElement invert(const PicardGroupDescription& d, const PicardElement& a);

EqualityVerdict elements_equal(const PicardGroupDescription& d, const PicardElement& a,
                               const PicardElement& b);

/// The induced automorphism of the leaf space at graph granularity.
GraphMap leaf_space_image(const PicardGroupDescription& d, const PicardElement& a);

/// True iff a fixes the leaf space pointwise: identity outer part and zero
/// angle on every zero curve. These are exactly the elements of the static
/// Picard group.
bool is_static(const PicardGroupDescription& d, const PicardElement& a);

/// Validates an element against the description (ids, reduced angles,
/// twist slots, word ranges). Throws DomainError on mismatch.
void check_element(const PicardGroupDescription& d, const PicardElement& a);

}  // namespace tss
