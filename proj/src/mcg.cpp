#include "tss/mcg.hpp"

#include <sstream>

#include "tss/error.hpp"

namespace tss {

namespace {

std::string type_str(const SurfaceType& s) {
  std::ostringstream oss;
  oss << "(genus=" << s.genus << ", fixed=" << s.fixed_boundary << ", free=" << s.free_boundary
      << ")";
  return oss.str();
}

}  // namespace

bool mcg_cataloged(const SurfaceType& s) {
  if (s.genus < 0 || s.fixed_boundary < 0 || s.free_boundary < 0) return false;
  if (s.free_boundary == 0) return s.fixed_boundary >= 1;
  // Free boundary present: only the disc-like and half-open cylinder cases.
  return s.genus == 0 && ((s.fixed_boundary == 0 && s.free_boundary == 1) ||
                          (s.fixed_boundary == 1 && s.free_boundary == 1));
}

GroupDescription mcg_structure(const SurfaceType& s) {
  if (!mcg_cataloged(s)) {
    throw UncatalogedError("mapping class group not cataloged for surface " + type_str(s));
  }
  const int g = s.genus;
  const int k = s.fixed_boundary;

  if (s.free_boundary > 0) {
    // (0,0,1): plane; (0,1,1): cylinder with one fixed end. Both trivial.
    return GroupDescription({}, "trivial");
  }
  if (g == 0 && k == 1) return GroupDescription({}, "disc fixing its boundary");
  if (g == 0 && k == 2) {
    // Annulus: the two boundary twists agree, a single Dehn twist generates.
    return GroupDescription({GroupAtom::z()}, "generated by the annulus Dehn twist");
  }
  // General split M(S) = D(dS) (+) PMod(S) with D(dS) = Z^k.
  std::vector<GroupAtom> atoms{GroupAtom::free_abelian(k), GroupAtom::pmod(g, k)};
  std::ostringstream note;
  note << "boundary Dehn twists Z^" << k;
  GroupAtom pm = GroupAtom::pmod(g, k);
  if (pm.kind != GroupAtom::Kind::Trivial) note << " (+) PMod(" << g << "," << k << ")";
  return GroupDescription(std::move(atoms), note.str());
}

SymplecticPicardReport symplectic_surface_picard_report(const SurfaceType& s) {
  SymplecticPicardReport r;
  r.genus = s.genus;
  r.ends = s.fixed_boundary + s.free_boundary;
  r.closed = r.ends == 0;

  if (r.closed && r.genus == 0) {
    // Sphere: trivial Picard group even though Mod(S) = Z2.
    r.pic = GroupDescription({}, "sphere");
    r.relations = {"Out(pi1(S)) = 1", "Mod(S) = Z2", "Pic(S) = Out(pi1(S)) = 1"};
    return r;
  }
  if (r.closed) {
    r.symbolic = true;
    r.pic_symbolic = "Mod(S)";
    r.relations = {"Pic(S) = Out(pi1(S)) = Mod(S)",
                   "j(Poiss(S)) = Out+(pi1(S)) < Out(pi1(S))"};
    return r;
  }
  if (r.genus == 0 && r.ends == 1) {
    r.pic = GroupDescription({}, "disc");
    r.relations = {"pi1(S) = 1", "Pic(S) = Out(pi1(S)) = 1"};
    return r;
  }
  if (r.genus == 0 && r.ends == 2) {
    r.pic = GroupDescription({GroupAtom::finite_cyclic(2)}, "cylinder");
    r.relations = {"pi1(S) = Z", "Out(pi1(S)) = Z2", "Pic(S) = Out(pi1(S)) = Z2",
                   "j(Poiss(S)) = PMod(S) = 1"};
    return r;
  }
  // Open surface of negative Euler characteristic.
  r.symbolic = true;
  r.pic_symbolic = "Out(pi1(S))";
  std::ostringstream f;
  f << "pi1(S) = F_" << (2 * r.genus + r.ends - 1);
  r.relations = {f.str(), "j(Poiss(S)) = Pic(S,dS) = PMod(S)", "PMod(S) < Mod(S)",
                 "Mod(S) < Out(pi1(S)) = Pic(S)"};
  return r;
}

}  // namespace tss
