#pragma once

#include <array>
#include <string>

namespace tss {

using Vec2 = std::array<double, 2>;
using Vec4 = std::array<double, 4>;
using Mat2 = std::array<std::array<double, 2>, 2>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat2x4 = std::array<std::array<double, 4>, 2>;

/// The flow map alpha(r, p) of the radial field (r^2 - 1) d/dr, i.e. the
/// target r-coordinate of the two-curve cylinder groupoid. Guards the chart:
/// requires r in (-2, 2) and |denominator| > 1e-9, else throws DomainError.
double alpha_flow(double r, double p);

/// One of the three explicit symplectic groupoid models over a surface chart:
///
///   AffinePlane:  base (x, y) in R^2,        pi = x d/dx ^ d/dy
///   CylinderOne:  base (r, theta), r in (-1,1),  pi = r d/dr ^ d/dtheta
///   CylinderTwo:  base (r, theta), r in (-2,2),  pi = (r^2-1) d/dr ^ d/dtheta
///
/// Points are 4-vectors (x, y, p, q) resp. (r, theta, p, q); theta is taken
/// mod 2pi. Source is the projection; the target moves the radial coordinate
/// by the time-p flow of the profile field and shifts the angular one by
/// q * profile. Multiplication adds p and composes q by
///   q'' = q + q' * (d/dr of the time-p flow),
/// the unique rule compatible with the printed source/target maps.
class GroupoidModel {
 public:
  enum class Kind { AffinePlane, CylinderOne, CylinderTwo };

  explicit GroupoidModel(Kind kind) : kind_(kind) {}

  Kind kind() const { return kind_; }
  std::string name() const;
  bool angular_base() const { return kind_ != Kind::AffinePlane; }

  /// The radial profile f with pi = f(r) d/dr ^ d/dtheta (f(x) = x for the
  /// affine plane).
  double profile(double r) const;
  double profile_deriv(double r) const;

  /// Time-p flow of the profile field and its r-derivative.
  double flow(double r, double p) const;
  double flow_deriv_r(double r, double p) const;

  /// Chart bound on the radial/base coordinate (open interval (-bound, bound),
  /// infinity for the affine plane).
  double radial_bound() const;
  bool in_domain(const Vec4& pt) const;

  Vec2 source(const Vec4& pt) const;
  Vec2 target(const Vec4& pt) const;
  Vec4 unit(const Vec2& base) const;
  Vec4 inverse(const Vec4& pt) const;

  /// Requires target(a) = source(b) within tolerance 1e-12 (exact fibers are
  /// measure zero in floating point); the product is built over a's base, so
  /// b's base is snapped onto the fiber. Throws DomainError on mismatch.
  Vec4 multiply(const Vec4& a, const Vec4& b) const;

  /// Composability defect |target(a) - source(b)| (angular part compared on
  /// the circle).
  double composability_defect(const Vec4& a, const Vec4& b) const;

  /// Negative control: the product with the transported-q term dropped.
  Vec4 multiply_q_dropped(const Vec4& a, const Vec4& b) const;

  /// Symplectic form matrix Omega_ij = Omega(d/dx_i, d/dx_j):
  ///   Omega = -q f'(r) dr^dp + dr^dq - dtheta^dp + f(r) dp^dq.
  Mat4 omega_matrix(const Vec4& pt) const;

  /// Poisson tensor matrix Pi_ij = Pi(dx_i, dx_j):
  ///   Pi = -f(r) dr^dtheta + dr^dq - dtheta^dp - q f'(r) dtheta^dq
  /// (for the affine plane this is the printed tensor of the groupoid).
  Mat4 pi_matrix(const Vec4& pt) const;

  Mat2x4 jac_source(const Vec4& pt) const;
  Mat2x4 jac_target(const Vec4& pt) const;

  /// Base Poisson structure matrix at a base point: [[0, f], [-f, 0]].
  Mat2 base_poisson(const Vec2& base) const;

  /// Leaf symplectic form d(ln|r|) ^ dtheta used by the pullback check;
  /// only available for AffinePlane and CylinderOne, away from r = 0.
  bool has_leaf_form() const { return kind_ != Kind::CylinderTwo; }
  Mat2 leaf_form(const Vec2& base) const;

  /// Angular difference wrapped to (-pi, pi] for circle-aware comparisons.
  static double wrap_angle(double a);
  /// Max-norm distance between base points, angular part on the circle.
  double base_distance(const Vec2& a, const Vec2& b) const;
  /// Max-norm distance between groupoid points, angular part on the circle.
  double point_distance(const Vec4& a, const Vec4& b) const;

 private:
  Kind kind_;
};

}  // namespace tss
