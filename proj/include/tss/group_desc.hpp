#pragma once

#include <string>
#include <vector>

#include "tss/rational.hpp"

namespace tss {

/// One factor of a structured abstract-group value.
struct GroupAtom {
  enum class Kind { Trivial, FreeAbelian, Torus, SymbolicPMod, FiniteCyclic };

  Kind kind = Kind::Trivial;
  long rank = 0;        // FreeAbelian rank / FiniteCyclic order
  Rational period;      // Torus period
  int genus = 0;        // SymbolicPMod
  int punctures = 0;    // SymbolicPMod

  static GroupAtom trivial() { return {}; }
  static GroupAtom z() { return free_abelian(1); }
  static GroupAtom free_abelian(long rank);
  static GroupAtom torus(Rational period);
  static GroupAtom pmod(int genus, int punctures);
  static GroupAtom finite_cyclic(long order);

  bool operator==(const GroupAtom&) const = default;
  std::string pretty() const;
};

/// A product of atoms describing an abstract group. Stored canonically:
/// free-abelian ranks are merged into a single atom, trivial factors are
/// dropped (an overall trivial group has an empty atom list), torus atoms are
/// sorted by period, symbolic PMod factors of a sphere with at most three
/// punctures collapse to the trivial group.
class GroupDescription {
 public:
  GroupDescription() = default;
  explicit GroupDescription(std::vector<GroupAtom> atoms, std::string note = "");

  const std::vector<GroupAtom>& atoms() const { return atoms_; }
  const std::string& presentation_note() const { return note_; }

  bool is_trivial() const { return atoms_.empty(); }
  long free_abelian_rank() const;

  /// Canonical direct product of two descriptions.
  GroupDescription direct_product(const GroupDescription& o) const;

  /// Human-readable form, e.g. "Z^3 (+) PMod(0,4)" or "1".
  std::string pretty() const;

  bool operator==(const GroupDescription&) const = default;

 private:
  std::vector<GroupAtom> atoms_;
  std::string note_;
};

}  // namespace tss
