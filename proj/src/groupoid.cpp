#include "tss/groupoid.hpp"

#include <cmath>
#include <limits>

#include "tss/error.hpp"

namespace tss {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kComposabilityTol = 1e-12;

double wrap_to_2pi(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

}  // namespace

double alpha_flow(double r, double p) {
  if (!(r > -2.0 && r < 2.0)) throw DomainError("alpha_flow: r outside (-2, 2)");
  const double e2p = std::exp(2.0 * p);
  const double den = (r + 1.0) - (r - 1.0) * e2p;
  if (std::abs(den) <= 1e-9) throw DomainError("alpha_flow: denominator blow-up");
  return ((r + 1.0) + (r - 1.0) * e2p) / den;
}

std::string GroupoidModel::name() const {
  switch (kind_) {
    case Kind::AffinePlane:
      return "affine-plane";
    case Kind::CylinderOne:
      return "cylinder-one";
    case Kind::CylinderTwo:
      return "cylinder-two";
  }
  return "?";
}

double GroupoidModel::profile(double r) const {
  switch (kind_) {
    case Kind::AffinePlane:
    case Kind::CylinderOne:
      return r;
    case Kind::CylinderTwo:
      return r * r - 1.0;
  }
  return 0;
}

double GroupoidModel::profile_deriv(double r) const {
  return kind_ == Kind::CylinderTwo ? 2.0 * r : 1.0;
}

double GroupoidModel::flow(double r, double p) const {
  if (kind_ == Kind::CylinderTwo) return alpha_flow(r, p);
  return r * std::exp(p);
}

double GroupoidModel::flow_deriv_r(double r, double p) const {
  if (kind_ == Kind::CylinderTwo) {
    const double e2p = std::exp(2.0 * p);
    const double den = (r + 1.0) - (r - 1.0) * e2p;
    if (std::abs(den) <= 1e-9) throw DomainError("flow derivative: denominator blow-up");
    return 4.0 * e2p / (den * den);
  }
  return std::exp(p);
}

double GroupoidModel::radial_bound() const {
  switch (kind_) {
    case Kind::AffinePlane:
      return std::numeric_limits<double>::infinity();
    case Kind::CylinderOne:
      return 1.0;
    case Kind::CylinderTwo:
      return 2.0;
  }
  return 0;
}

bool GroupoidModel::in_domain(const Vec4& pt) const {
  if (!std::isfinite(pt[0]) || !std::isfinite(pt[1]) || !std::isfinite(pt[2]) ||
      !std::isfinite(pt[3])) {
    return false;
  }
  return std::abs(pt[0]) < radial_bound();
}

Vec2 GroupoidModel::source(const Vec4& pt) const {
  double b = angular_base() ? wrap_to_2pi(pt[1]) : pt[1];
  return {pt[0], b};
}

Vec2 GroupoidModel::target(const Vec4& pt) const {
  if (!in_domain(pt)) throw DomainError(name() + ": point outside the chart");
  const double r2 = flow(pt[0], pt[2]);
  double b2 = pt[1] + pt[3] * profile(pt[0]);
  if (angular_base()) {
    b2 = wrap_to_2pi(b2);
  }
  if (std::abs(r2) >= radial_bound()) throw DomainError(name() + ": target leaves the chart");
  return {r2, b2};
}

Vec4 GroupoidModel::unit(const Vec2& base) const { return {base[0], base[1], 0.0, 0.0}; }

Vec4 GroupoidModel::inverse(const Vec4& pt) const {
  const Vec2 t = target(pt);
  return {t[0], t[1], -pt[2], -pt[3] / flow_deriv_r(pt[0], pt[2])};
}

double GroupoidModel::composability_defect(const Vec4& a, const Vec4& b) const {
  return base_distance(target(a), source(b));
}

Vec4 GroupoidModel::multiply(const Vec4& a, const Vec4& b) const {
  if (composability_defect(a, b) > kComposabilityTol) {
    throw DomainError(name() + ": non-composable pair (target/source mismatch)");
  }
  // The product lives over a's base; b's base coordinates are implied.
  return {a[0], a[1], a[2] + b[2], a[3] + b[3] * flow_deriv_r(a[0], a[2])};
}

Vec4 GroupoidModel::multiply_q_dropped(const Vec4& a, const Vec4& b) const {
  return {a[0], a[1], a[2] + b[2], a[3]};
}

Mat4 GroupoidModel::omega_matrix(const Vec4& pt) const {
  const double r = pt[0];
  const double q = pt[3];
  Mat4 o{};
  o[0][2] = -q * profile_deriv(r);
  o[0][3] = 1.0;
  o[1][2] = -1.0;
  o[2][3] = profile(r);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) o[i][j] = -o[j][i];
  }
  return o;
}

Mat4 GroupoidModel::pi_matrix(const Vec4& pt) const {
  const double r = pt[0];
  const double q = pt[3];
  Mat4 p{};
  p[0][1] = -profile(r);
  p[0][3] = 1.0;
  p[1][2] = -1.0;
  p[1][3] = -q * profile_deriv(r);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) p[i][j] = -p[j][i];
  }
  return p;
}

Mat2x4 GroupoidModel::jac_source(const Vec4&) const {
  Mat2x4 j{};
  j[0][0] = 1.0;
  j[1][1] = 1.0;
  return j;
}

Mat2x4 GroupoidModel::jac_target(const Vec4& pt) const {
  const double r = pt[0];
  const double p = pt[2];
  const double q = pt[3];
  Mat2x4 j{};
  j[0][0] = flow_deriv_r(r, p);
  j[0][2] = kind_ == Kind::CylinderTwo ? (flow(r, p) * flow(r, p) - 1.0) : flow(r, p);
  j[1][0] = q * profile_deriv(r);
  j[1][1] = 1.0;
  j[1][3] = profile(r);
  return j;
}

Mat2 GroupoidModel::base_poisson(const Vec2& base) const {
  const double f = profile(base[0]);
  return {{{0.0, f}, {-f, 0.0}}};
}

Mat2 GroupoidModel::leaf_form(const Vec2& base) const {
  if (!has_leaf_form()) {
    throw DomainError(name() + ": no closed-form leaf symplectic primitive");
  }
  if (std::abs(base[0]) < 1e-12) throw DomainError("leaf form singular at r = 0");
  const double inv = 1.0 / base[0];
  return {{{0.0, inv}, {-inv, 0.0}}};
}

double GroupoidModel::wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);
  return w;
}

double GroupoidModel::base_distance(const Vec2& a, const Vec2& b) const {
  double d0 = std::abs(a[0] - b[0]);
  double d1 = angular_base() ? std::abs(wrap_angle(a[1] - b[1])) : std::abs(a[1] - b[1]);
  return std::max(d0, d1);
}

double GroupoidModel::point_distance(const Vec4& a, const Vec4& b) const {
  double d0 = std::abs(a[0] - b[0]);
  double d1 = angular_base() ? std::abs(wrap_angle(a[1] - b[1])) : std::abs(a[1] - b[1]);
  double d2 = std::abs(a[2] - b[2]);
  double d3 = std::abs(a[3] - b[3]);
  return std::max(std::max(d0, d1), std::max(d2, d3));
}

}  // namespace tss
