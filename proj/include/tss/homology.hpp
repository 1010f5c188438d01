#pragma once

#include <string>
#include <vector>

#include "tss/free_word.hpp"
#include "tss/mcg.hpp"

namespace tss {

/// Square integer matrix acting on H_1 of a surface with boundary, in the
/// basis a_1, b_1, ..., a_g, b_g, d_1, ..., d_{b-1} coming from the polygon
/// presentation of the fundamental group (the last boundary class is
/// eliminated).
struct HomologyMatrix {
  std::vector<std::vector<long long>> m;

  std::size_t size() const { return m.size(); }
  static HomologyMatrix identity(std::size_t n);
  HomologyMatrix operator*(const HomologyMatrix& o) const;
  HomologyMatrix transpose() const;
  bool operator==(const HomologyMatrix&) const = default;

  /// Exact determinant (Bareiss elimination over 128-bit intermediates).
  long long determinant() const;
};

/// Rank of H_1: 2g + b - 1, with b = fixed + free boundary circles.
std::size_t homology_rank(const SurfaceType& s);

/// The intersection pairing J: <a_i, b_i> = +1, <b_i, a_i> = -1, boundary
/// classes pair to zero with everything.
HomologyMatrix intersection_pairing(const SurfaceType& s);

/// The transvection x -> x + <x, c> c realizing the Dehn twist about a curve
/// with homology class c. Throws DomainError on size mismatch.
std::vector<long long> twist_transvection(const std::vector<long long>& curve_class,
                                          const std::vector<long long>& x,
                                          const HomologyMatrix& pairing);

/// Matrix of the transvection (as above) raised to the power `exponent`.
HomologyMatrix transvection_matrix(const std::vector<long long>& curve_class,
                                   const HomologyMatrix& pairing, long exponent = 1);

struct TwistLetter {
  std::vector<long long> curve_class;
  int exponent = +1;  // +-1
};

/// Matrix of the composite of the twists read left to right (the leftmost
/// letter acts first), i.e. M(word) = M(last) * ... * M(first).
HomologyMatrix homology_action(const std::vector<TwistLetter>& word, const SurfaceType& s);

/// Named symbolic generators of PMod(g, k) with their declared homology
/// classes: twists about the 2g core curves a_i, b_i, then about curves
/// enclosing adjacent boundary pairs. Empty when PMod(g, k) is trivial.
struct PModGenerator {
  std::string name;
  std::vector<long long> curve_class;
};
std::vector<PModGenerator> pmod_generators(const SurfaceType& s);

/// Homology action of a free word in the pmod_generators of s.
HomologyMatrix pmod_word_action(const FreeWord& w, const SurfaceType& s);

}  // namespace tss
