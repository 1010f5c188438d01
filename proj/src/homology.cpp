#include "tss/homology.hpp"

#include <cstdlib>

#include "tss/error.hpp"

namespace tss {

HomologyMatrix HomologyMatrix::identity(std::size_t n) {
  HomologyMatrix h;
  h.m.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) h.m[i][i] = 1;
  return h;
}

HomologyMatrix HomologyMatrix::operator*(const HomologyMatrix& o) const {
  const std::size_t n = size();
  if (n != o.size()) throw DomainError("homology matrix dimension mismatch");
  HomologyMatrix r;
  r.m.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (m[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.m[i][j] += m[i][k] * o.m[k][j];
    }
  }
  return r;
}

HomologyMatrix HomologyMatrix::transpose() const {
  const std::size_t n = size();
  HomologyMatrix r;
  r.m.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.m[j][i] = m[i][j];
  }
  return r;
}

long long HomologyMatrix::determinant() const {
  // Bareiss fraction-free elimination; divisions are exact.
  const std::size_t n = size();
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  }
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return static_cast<long long>(sign * a[n - 1][n - 1]);
}

std::size_t homology_rank(const SurfaceType& s) {
  const int b = s.fixed_boundary + s.free_boundary;
  if (b < 1) throw DomainError("homology basis requires at least one boundary circle");
  return static_cast<std::size_t>(2 * s.genus + b - 1);
}

HomologyMatrix intersection_pairing(const SurfaceType& s) {
  const std::size_t n = homology_rank(s);
  HomologyMatrix j;
  j.m.assign(n, std::vector<long long>(n, 0));
  for (int i = 0; i < s.genus; ++i) {
    j.m[2 * i][2 * i + 1] = 1;
    j.m[2 * i + 1][2 * i] = -1;
  }
  return j;
}

namespace {

long long pair_with(const std::vector<long long>& x, const std::vector<long long>& c,
                    const HomologyMatrix& j) {
  long long v = 0;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) v += x[a] * j.m[a][b] * c[b];
  }
  return v;
}

}  // namespace

std::vector<long long> twist_transvection(const std::vector<long long>& curve_class,
                                          const std::vector<long long>& x,
                                          const HomologyMatrix& pairing) {
  const std::size_t n = pairing.size();
  if (curve_class.size() != n || x.size() != n) {
    throw DomainError("transvection vector length does not match the pairing");
  }
  long long coeff = pair_with(x, curve_class, pairing);
  std::vector<long long> out = x;
  for (std::size_t i = 0; i < n; ++i) out[i] += coeff * curve_class[i];
  return out;
}

HomologyMatrix transvection_matrix(const std::vector<long long>& curve_class,
                                   const HomologyMatrix& pairing, long exponent) {
  const std::size_t n = pairing.size();
  if (curve_class.size() != n) {
    throw DomainError("transvection vector length does not match the pairing");
  }
  // T^k = I + k * c (Jc)^T; <c, c> = 0 makes the powers add up.
  HomologyMatrix t = HomologyMatrix::identity(n);
  std::vector<long long> jc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) jc[i] += pairing.m[i][k] * curve_class[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) t.m[i][k] += exponent * curve_class[i] * jc[k];
  }
  return t;
}

HomologyMatrix homology_action(const std::vector<TwistLetter>& word, const SurfaceType& s) {
  const HomologyMatrix j = intersection_pairing(s);
  HomologyMatrix acc = HomologyMatrix::identity(j.size());
  for (const TwistLetter& l : word) {
    if (l.exponent != 1 && l.exponent != -1) throw DomainError("twist exponent must be +-1");
    acc = transvection_matrix(l.curve_class, j, l.exponent) * acc;
  }
  return acc;
}

std::vector<PModGenerator> pmod_generators(const SurfaceType& s) {
  std::vector<PModGenerator> gens;
  const int g = s.genus;
  const int b = s.fixed_boundary + s.free_boundary;
  if (GroupAtom::pmod(g, b).kind == GroupAtom::Kind::Trivial) return gens;
  const std::size_t n = homology_rank(s);
  for (int i = 0; i < g; ++i) {
    PModGenerator ta{"t_a" + std::to_string(i + 1), std::vector<long long>(n, 0)};
    ta.curve_class[2 * i] = 1;
    gens.push_back(std::move(ta));
    PModGenerator tb{"t_b" + std::to_string(i + 1), std::vector<long long>(n, 0)};
    tb.curve_class[2 * i + 1] = 1;
    gens.push_back(std::move(tb));
  }
  // Twists about curves enclosing adjacent boundary pairs; the last boundary
  // class is -(d_1 + ... + d_{b-1}) in this basis.
  for (int jx = 0; jx + 1 < b; ++jx) {
    PModGenerator td{"t_d" + std::to_string(jx + 1) + std::to_string(jx + 2),
                     std::vector<long long>(n, 0)};
    td.curve_class[2 * g + jx] += 1;
    if (jx + 1 < b - 1) {
      td.curve_class[2 * g + jx + 1] += 1;
    } else {
      for (int mdx = 0; mdx < b - 1; ++mdx) td.curve_class[2 * g + mdx] -= 1;
    }
    gens.push_back(std::move(td));
  }
  return gens;
}

HomologyMatrix pmod_word_action(const FreeWord& w, const SurfaceType& s) {
  const auto gens = pmod_generators(s);
  std::vector<TwistLetter> word;
  word.reserve(w.length());
  for (const Letter& l : w.letters()) {
    if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= gens.size()) {
      throw DomainError("pmod word generator index out of range");
    }
    word.push_back({gens[l.generator].curve_class, l.exponent});
  }
  return homology_action(word, s);
}

}  // namespace tss
