#include "tss/group_desc.hpp"

#include <algorithm>

#include "tss/error.hpp"

namespace tss {

GroupAtom GroupAtom::free_abelian(long rank) {
  if (rank < 0) throw DomainError("free abelian rank must be nonnegative");
  GroupAtom a;
  a.kind = rank == 0 ? Kind::Trivial : Kind::FreeAbelian;
  a.rank = rank == 0 ? 0 : rank;
  return a;
}

GroupAtom GroupAtom::torus(Rational period) {
  if (period.sign() <= 0) throw DomainError("torus period must be positive");
  GroupAtom a;
  a.kind = Kind::Torus;
  a.period = std::move(period);
  return a;
}

GroupAtom GroupAtom::pmod(int genus, int punctures) {
  GroupAtom a;
  // PMod of a sphere with up to three punctures is trivial.
  if (genus == 0 && punctures <= 3) return a;
  a.kind = Kind::SymbolicPMod;
  a.genus = genus;
  a.punctures = punctures;
  return a;
}

GroupAtom GroupAtom::finite_cyclic(long order) {
  if (order < 1) throw DomainError("finite cyclic order must be positive");
  GroupAtom a;
  if (order == 1) return a;
  a.kind = Kind::FiniteCyclic;
  a.rank = order;
  return a;
}

std::string GroupAtom::pretty() const {
  switch (kind) {
    case Kind::Trivial:
      return "1";
    case Kind::FreeAbelian:
      return rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    case Kind::Torus:
      return "T_{" + period.str() + "}";
    case Kind::SymbolicPMod:
      return "PMod(" + std::to_string(genus) + "," + std::to_string(punctures) + ")";
    case Kind::FiniteCyclic:
      return "Z" + std::to_string(rank);
  }
  return "?";
}

namespace {

// Sort key: structural atoms first by kind, tori by period, PMod by (g, n).
bool atom_less(const GroupAtom& a, const GroupAtom& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  switch (a.kind) {
    case GroupAtom::Kind::Torus:
      return a.period < b.period;
    case GroupAtom::Kind::SymbolicPMod:
      return std::pair{a.genus, a.punctures} < std::pair{b.genus, b.punctures};
    default:
      return a.rank < b.rank;
  }
}

}  // namespace

GroupDescription::GroupDescription(std::vector<GroupAtom> atoms, std::string note)
    : note_(std::move(note)) {
  long rank = 0;
  for (auto& a : atoms) {
    if (a.kind == GroupAtom::Kind::Trivial) continue;
    if (a.kind == GroupAtom::Kind::FreeAbelian) {
      rank += a.rank;
      continue;
    }
    atoms_.push_back(std::move(a));
  }
  if (rank > 0) atoms_.push_back(GroupAtom::free_abelian(rank));
  std::sort(atoms_.begin(), atoms_.end(), atom_less);
}

long GroupDescription::free_abelian_rank() const {
  for (const auto& a : atoms_) {
    if (a.kind == GroupAtom::Kind::FreeAbelian) return a.rank;
  }
  return 0;
}

GroupDescription GroupDescription::direct_product(const GroupDescription& o) const {
  std::vector<GroupAtom> all = atoms_;
  all.insert(all.end(), o.atoms_.begin(), o.atoms_.end());
  std::string note = note_;
  if (!o.note_.empty()) note = note.empty() ? o.note_ : note + "; " + o.note_;
  return GroupDescription(std::move(all), std::move(note));
}

std::string GroupDescription::pretty() const {
  if (atoms_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (i) out += " (+) ";
    out += atoms_[i].pretty();
  }
  return out;
}

}  // namespace tss
