#pragma once

// Shared constructors for the example structures used across the test suites.

#include <string>

#include "tss/rational.hpp"
#include "tss/surface.hpp"

namespace examples {

using tss::Leaf;
using tss::Rational;
using tss::TssSurface;
using tss::ZeroCurve;

/// Open cylinder with one separating zero curve; two half-open cylinder
/// leaves. Period defaults to the 44/7 stand-in for 2*pi.
inline TssSurface cyl1(const Rational& period = Rational::parse("44/7"),
                       const Rational& volume = Rational(3)) {
  TssSurface s;
  s.closed = false;
  s.leaves = {{"Lpos", 0, +1, volume, 1}, {"Lneg", 0, -1, -volume, 1}};
  s.curves = {{"T", period, "Lneg", "Lpos"}};
  return s;
}

/// Open cylinder with two separating zero curves: negative annulus leaf in
/// the middle, positive half-open cylinder leaves at the ends.
inline TssSurface cyl2(const Rational& period1 = Rational::parse("22/7"),
                       const Rational& period2 = Rational::parse("22/7")) {
  TssSurface s;
  s.closed = false;
  s.leaves = {{"Lleft", 0, +1, Rational(2), 1},
              {"Lmid", 0, -1, Rational(-1), 0},
              {"Lright", 0, +1, Rational(2), 1}};
  s.curves = {{"T1", period1, "Lmid", "Lleft"}, {"T2", period2, "Lmid", "Lright"}};
  return s;
}

/// Sphere with an equatorial zero curve; two disc leaves.
inline TssSurface sphere_equator() {
  TssSurface s;
  s.closed = true;
  s.leaves = {{"North", 0, +1, Rational(1), 0}, {"South", 0, -1, Rational(-1), 0}};
  s.curves = {{"Eq", Rational(2), "South", "North"}};
  return s;
}

/// Torus with n = 2k parallel non-separating zero curves; n cylinder leaves
/// in a ring with alternating signs.
inline TssSurface torus_parallel(int n, const Rational& period = Rational::parse("3/2")) {
  TssSurface s;
  s.closed = true;
  for (int i = 0; i < n; ++i) {
    int sign = i % 2 == 0 ? +1 : -1;
    s.leaves.push_back({"L" + std::to_string(i), 0, sign, Rational(sign), 0});
  }
  for (int i = 0; i < n; ++i) {
    // Curve i separates leaf i-1 from leaf i.
    const std::string a = "L" + std::to_string((i + n - 1) % n);
    const std::string b = "L" + std::to_string(i);
    const std::string neg = (i % 2 == 0) ? a : b;
    const std::string pos = (i % 2 == 0) ? b : a;
    s.curves.push_back({"T" + std::to_string(i), period, neg, pos});
  }
  return s;
}

/// Open cylinder subdivided by n separating zero curves into n+1 leaves.
inline TssSurface cylinder_chain(int n, const Rational& period = Rational(1)) {
  TssSurface s;
  s.closed = false;
  for (int i = 0; i <= n; ++i) {
    int sign = i % 2 == 0 ? +1 : -1;
    int free = (i == 0 || i == n) ? 1 : 0;
    s.leaves.push_back({"L" + std::to_string(i), 0, sign, Rational(sign), free});
  }
  for (int i = 0; i < n; ++i) {
    const std::string a = "L" + std::to_string(i);
    const std::string b = "L" + std::to_string(i + 1);
    const std::string neg = (i % 2 == 0) ? b : a;
    const std::string pos = (i % 2 == 0) ? a : b;
    s.curves.push_back({"T" + std::to_string(i), period, neg, pos});
  }
  return s;
}

/// Closed genus-2 surface split by one separating curve into two one-holed
/// tori.
inline TssSurface genus2_separating() {
  TssSurface s;
  s.closed = true;
  s.leaves = {{"H1", 1, +1, Rational(1), 0}, {"H2", 1, -1, Rational(-1), 0}};
  s.curves = {{"T", Rational(1), "H2", "H1"}};
  return s;
}

}  // namespace examples
