#pragma once

#include <string>
#include <vector>

#include "tss/rational.hpp"

namespace tss {

/// A circle on which the Poisson tensor vanishes linearly. The sign of the
/// structure flips across it, so the two sides lie in distinct leaves.
struct ZeroCurve {
  std::string id;
  Rational period;        // modular period, > 0
  std::string neg_leaf;   // leaf on the side where the structure is negative
  std::string pos_leaf;   // leaf on the positive side

  bool operator==(const ZeroCurve&) const = default;
};

/// A 2-dimensional symplectic leaf of the structure.
struct Leaf {
  std::string id;
  int genus = 0;
  int sign = +1;          // sign of the structure relative to the orientation
  Rational volume;        // signed regularized Liouville volume
  int free_boundary = 0;  // boundary circles of the ambient surface itself

  bool operator==(const Leaf&) const = default;
};

/// Combinatorial description of a topologically stable Poisson structure on a
/// compact connected oriented surface (optionally with free boundary).
struct TssSurface {
  bool closed = true;
  std::vector<ZeroCurve> curves;
  std::vector<Leaf> leaves;

  bool operator==(const TssSurface&) const = default;

  const Leaf* find_leaf(const std::string& id) const;
  const ZeroCurve* find_curve(const std::string& id) const;
  /// Number of zero curves bounding the leaf (each curve touches a leaf on
  /// one side only, so this counts curve ids).
  int incident_curves(const std::string& leaf_id) const;
};

struct GraphVertex {
  std::string id;
  int genus = 0;
  int sign = +1;

  bool operator==(const GraphVertex&) const = default;
};

struct GraphEdge {
  std::string id;
  std::string tail;  // negative-side vertex
  std::string head;  // positive-side vertex
  Rational period;

  bool operator==(const GraphEdge&) const = default;
};

/// The directed labeled graph invariant: one vertex per leaf (genus label),
/// one edge per zero curve (period label), oriented toward the leaf where the
/// structure is positive.
struct LabeledGraph {
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  bool operator==(const LabeledGraph&) const = default;

  const GraphVertex* find_vertex(const std::string& id) const;
  const GraphEdge* find_edge(const std::string& id) const;
};

struct Violation {
  std::string code;     // stable machine-readable identifier
  std::string message;  // human-readable detail
};

/// Violated invariants of a TssSurface; empty report means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const TssSurface& s);

/// Throws InvalidSurfaceError (listing the violations) unless s is valid.
void require_valid(const TssSurface& s);

/// Sum over leaves of 2 - 2*genus - b, where b counts incident zero curves
/// plus free boundary circles. Equals the Euler characteristic of the surface.
long euler_characteristic(const TssSurface& s);

/// Builds the labeled graph invariant. Requires a valid surface.
LabeledGraph build_graph(const TssSurface& s);

}  // namespace tss
