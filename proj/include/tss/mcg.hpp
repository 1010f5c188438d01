#pragma once

#include <string>
#include <vector>

#include "tss/group_desc.hpp"

namespace tss {

/// A connected oriented surface with boundary circles split into those fixed
/// pointwise (zero curves, for TSS leaves) and free ones (boundary of the
/// ambient surface).
struct SurfaceType {
  int genus = 0;
  int fixed_boundary = 0;
  int free_boundary = 0;

  bool operator==(const SurfaceType&) const = default;
};

/// The mapping class group of s relative to its fixed boundary circles,
/// i.e. isotopy classes of diffeomorphisms fixing a neighborhood of each
/// fixed circle pointwise. Cataloged values:
///
///   (0,1,0), (0,0,1), (0,1,1)  -> trivial (disc, plane, half-open cylinder)
///   (0,2,0)                    -> Z, generated by the annulus Dehn twist
///   (0,k,0), k >= 3            -> Z^k (+) PMod(0,k)
///   (g,k,0), g >= 1, k >= 1    -> Z^k (+) PMod(g,k)
///
/// Anything else (closed surfaces, further free-boundary combinations)
/// throws UncatalogedError rather than guessing.
GroupDescription mcg_structure(const SurfaceType& s);

/// True iff mcg_structure(s) is defined.
bool mcg_cataloged(const SurfaceType& s);

/// Report on the Picard group of a symplectic surface of the given genus and
/// number of ends; the group equals the outer automorphism group of the
/// fundamental group, with closed-form values for the sphere, disc and
/// cylinder and a symbolic answer otherwise.
struct SymplecticPicardReport {
  bool closed = false;
  int genus = 0;
  int ends = 0;
  bool symbolic = false;
  GroupDescription pic;       // meaningful when !symbolic
  std::string pic_symbolic;   // meaningful when symbolic
  std::vector<std::string> relations;
};

/// Interprets fixed_boundary + free_boundary as the ends of the surface.
SymplecticPicardReport symplectic_surface_picard_report(const SurfaceType& s);

}  // namespace tss
