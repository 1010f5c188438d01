#include "tss/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tss/error.hpp"

namespace tss {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;

/// Deterministic per-sample stream: a fresh engine seeded from (seed, index),
/// so parallel schedules could not reorder draws.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index)
      : engine_(seed * 0x9e3779b97f4a7c15ULL + index + 1) {}

  double uniform(double lo, double hi) {
    const double u = (engine_() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  double sign() { return uniform(0, 1) < 0.5 ? -1.0 : 1.0; }

 private:
  std::mt19937_64 engine_;
};

struct SampleRanges {
  double r_lo, r_hi;       // magnitude of the radial coordinate
  double base2_lo, base2_hi;
  double p_max;
  double q_max;
};

SampleRanges ranges_for(const GroupoidModel& m) {
  switch (m.kind()) {
    case GroupoidModel::Kind::AffinePlane:
      return {0.1, 2.5, -2.0, 2.0, 0.7, 1.5};
    case GroupoidModel::Kind::CylinderOne:
      return {0.05, 0.28, 0.0, kTwoPi, 0.4, 1.5};
    case GroupoidModel::Kind::CylinderTwo:
      return {0.05, 1.6, 0.0, kTwoPi, 0.18, 1.5};
  }
  return {};
}

Vec4 sample_point(const GroupoidModel& m, SampleRng& rng) {
  const SampleRanges r = ranges_for(m);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vec4 pt{rng.sign() * rng.uniform(r.r_lo, r.r_hi), rng.uniform(r.base2_lo, r.base2_hi),
            rng.uniform(-r.p_max, r.p_max), rng.uniform(-r.q_max, r.q_max)};
    try {
      m.target(pt);  // throws if the flow leaves the chart
      return pt;
    } catch (const DomainError&) {
      continue;
    }
  }
  throw DomainError("sampling failed to find an in-chart point");
}

// A composable triple with exactly matching fibers; all intermediate flows
// stay strictly inside the chart.
struct Triple {
  Vec4 g1, g2, g3;
};

Triple sample_triple(const GroupoidModel& m, SampleRng& rng) {
  const SampleRanges r = ranges_for(m);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Vec4 g1{rng.sign() * rng.uniform(r.r_lo, r.r_hi), rng.uniform(r.base2_lo, r.base2_hi),
            rng.uniform(-r.p_max, r.p_max), rng.uniform(-r.q_max, r.q_max)};
    Vec4 g2{0, 0, rng.uniform(-r.p_max, r.p_max), rng.uniform(-r.q_max, r.q_max)};
    Vec4 g3{0, 0, rng.uniform(-r.p_max, r.p_max), rng.uniform(-r.q_max, r.q_max)};
    try {
      Vec2 b2 = m.target(g1);
      g2[0] = b2[0];
      g2[1] = b2[1];
      Vec2 b3 = m.target(g2);
      g3[0] = b3[0];
      g3[1] = b3[1];
      m.target(g3);
      return {g1, g2, g3};
    } catch (const DomainError&) {
      continue;
    }
  }
  throw DomainError("sampling failed to build a composable triple");
}

CheckResult make_check(std::string name, int samples, double max_residual, double tol,
                       std::string note = "") {
  CheckResult c;
  c.name = std::move(name);
  c.samples = samples;
  c.max_residual = max_residual;
  c.tol = tol;
  c.pass = max_residual <= tol;
  c.note = std::move(note);
  return c;
}

double mat2_distance(const Mat2& a, const Mat2& b) {
  double d = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  }
  return d;
}

Mat4 pullback4(const Mat2x4& jac, const Mat2& form) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double v = 0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) v += jac[a][i] * form[a][b] * jac[b][j];
      }
      out[i][j] = v;
    }
  }
  return out;
}

Mat2 push2(const Mat2x4& jac, const Mat4& tensor) {
  Mat2 out{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      double v = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) v += jac[a][i] * tensor[i][j] * jac[b][j];
      }
      out[a][b] = v;
    }
  }
  return out;
}

double mat4_distance(const Mat4& a, const Mat4& b) {
  double d = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  }
  return d;
}

Mat4 mat4_product(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double v = 0;
      for (int k = 0; k < 4; ++k) v += a[i][k] * b[k][j];
      out[i][j] = v;
    }
  }
  return out;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_groupoid_axioms(const GroupoidModel& m, const VerifyOptions& opt) {
  if (opt.samples < 1) throw DomainError("sample count must be at least 1");
  VerificationReport report;
  report.model = m.name();

  auto mult = [&](const Vec4& a, const Vec4& b) {
    return opt.perturb_multiplication ? m.multiply_q_dropped(a, b) : m.multiply(a, b);
  };

  double assoc = 0, src = 0, tgt = 0, lunit = 0, runit = 0, linv = 0, rinv = 0;
  const double big = std::numeric_limits<double>::infinity();
  for (int i = 0; i < opt.samples; ++i) {
    SampleRng rng(opt.seed, static_cast<std::uint64_t>(i));
    Triple t = sample_triple(m, rng);
    try {
      Vec4 g12 = mult(t.g1, t.g2);
      Vec4 g23 = mult(t.g2, t.g3);
      // Associativity includes the composability of the derived products:
      // a broken multiplication leaves its products on the wrong fiber.
      double defect = std::max(m.composability_defect(g12, t.g3),
                               m.composability_defect(t.g1, g23));
      assoc = std::max(assoc, defect);
      assoc = std::max(assoc, m.point_distance(mult(g12, t.g3), mult(t.g1, g23)));
      src = std::max(src, m.base_distance(m.source(g12), m.source(t.g1)));
      tgt = std::max(tgt, m.base_distance(m.target(g12), m.target(t.g2)));

      Vec4 g = t.g1;
      lunit = std::max(lunit, m.point_distance(mult(m.unit(m.source(g)), g), g));
      runit = std::max(runit, m.point_distance(mult(g, m.unit(m.target(g))), g));
      Vec4 ginv = m.inverse(g);
      linv = std::max(linv, m.point_distance(mult(g, ginv), m.unit(m.source(g))));
      rinv = std::max(rinv, m.point_distance(mult(ginv, g), m.unit(m.target(g))));
    } catch (const DomainError&) {
      assoc = big;  // non-composable products or chart exits count as failure
    }
  }

  report.checks.push_back(make_check("associativity", opt.samples, assoc, opt.tol));
  report.checks.push_back(make_check("source-of-product", opt.samples, src, opt.tol));
  report.checks.push_back(make_check("target-of-product", opt.samples, tgt, opt.tol));
  report.checks.push_back(make_check("left-unit", opt.samples, lunit, opt.tol));
  report.checks.push_back(make_check("right-unit", opt.samples, runit, opt.tol));
  report.checks.push_back(make_check("inverse-left", opt.samples, linv, opt.tol));
  report.checks.push_back(make_check("inverse-right", opt.samples, rinv, opt.tol));
  return report;
}

VerificationReport verify_symplectic_compatibility(const GroupoidModel& m,
                                                   const VerifyOptions& opt) {
  if (opt.samples < 1) throw DomainError("sample count must be at least 1");
  VerificationReport report;
  report.model = m.name();

  // Global sign relating Omega and Pi, fixed at the first sample.
  double sigma = 0;
  {
    SampleRng rng(opt.seed, 0);
    Vec4 pt = sample_point(m, rng);
    Mat4 prod = mat4_product(m.omega_matrix(pt), m.pi_matrix(pt));
    sigma = prod[0][0] >= 0 ? 1.0 : -1.0;
  }

  double res_a = 0, res_b = 0, res_c = 0, res_d = 0;
  for (int i = 0; i < opt.samples; ++i) {
    SampleRng rng(opt.seed, static_cast<std::uint64_t>(i));
    Vec4 pt = sample_point(m, rng);

    // (a) Omega * Pi = sigma * Id.
    Mat4 prod = mat4_product(m.omega_matrix(pt), m.pi_matrix(pt));
    Mat4 id{};
    for (int k = 0; k < 4; ++k) id[k][k] = sigma;
    res_a = std::max(res_a, mat4_distance(prod, id));

    // (b) Omega = t^* omega_leaf - s^* omega_leaf, where the primitive exists.
    if (m.has_leaf_form()) {
      Vec2 sb = m.source(pt);
      Vec2 tb = m.target(pt);
      if (std::abs(sb[0]) > 0.05 && std::abs(tb[0]) > 0.05) {
        Mat4 diff{};
        Mat4 tpull = pullback4(m.jac_target(pt), m.leaf_form(tb));
        Mat4 spull = pullback4(m.jac_source(pt), m.leaf_form(sb));
        for (int a = 0; a < 4; ++a) {
          for (int b = 0; b < 4; ++b) diff[a][b] = tpull[a][b] - spull[a][b];
        }
        res_b = std::max(res_b, mat4_distance(diff, m.omega_matrix(pt)));
      }
    }

    // (c) dOmega = 0 via central finite differences.
    const double h = opt.d_omega_step;
    auto omega_at = [&](int coord, double delta) {
      Vec4 moved = pt;
      moved[coord] += delta;
      return m.omega_matrix(moved);
    };
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        for (int c = b + 1; c < 4; ++c) {
          auto d_of = [&](int wrt, int i1, int i2) {
            Mat4 plus = omega_at(wrt, h);
            Mat4 minus = omega_at(wrt, -h);
            return (plus[i1][i2] - minus[i1][i2]) / (2 * h);
          };
          double val = d_of(a, b, c) - d_of(b, a, c) + d_of(c, a, b);
          res_c = std::max(res_c, std::abs(val));
        }
      }
    }

    // (d) Moment maps: s pushes Pi to sigma * pi, t to -sigma * pi.
    Mat2 spush = push2(m.jac_source(pt), m.pi_matrix(pt));
    Mat2 tpush = push2(m.jac_target(pt), m.pi_matrix(pt));
    Mat2 pis = m.base_poisson(m.source(pt));
    Mat2 pit = m.base_poisson(m.target(pt));
    Mat2 want_s{}, want_t{};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        want_s[a][b] = sigma * pis[a][b];
        want_t[a][b] = -sigma * pit[a][b];
      }
    }
    res_d = std::max(res_d, mat2_distance(spush, want_s));
    res_d = std::max(res_d, mat2_distance(tpush, want_t));
  }

  const std::string sig_note = sigma > 0 ? "sigma=+1" : "sigma=-1";
  report.checks.push_back(
      make_check("omega-pi-identity", opt.samples, res_a, opt.tol, sig_note));
  if (m.has_leaf_form()) {
    report.checks.push_back(make_check("pullback-difference", opt.samples, res_b, opt.tol));
  }
  report.checks.push_back(
      make_check("d-omega-closed", opt.samples, res_c, opt.d_omega_tol,
                 "finite differences, step " + std::to_string(opt.d_omega_step)));
  report.checks.push_back(
      make_check("moment-maps-poisson", opt.samples, res_d, opt.tol, sig_note));
  return report;
}

VerificationReport verify_modular_lift(const GroupoidModel& m, const VerifyOptions& opt) {
  if (m.kind() != GroupoidModel::Kind::AffinePlane) {
    throw DomainError("modular lift check is defined for the affine plane model");
  }
  if (opt.samples < 1) throw DomainError("sample count must be at least 1");
  VerificationReport report;
  report.model = m.name();

  const int row = opt.modular_lift_use_hq ? 3 : 2;  // H_p vs the H_q control
  double res = 0;
  for (int i = 0; i < opt.samples; ++i) {
    SampleRng rng(opt.seed, static_cast<std::uint64_t>(i));
    Vec4 pt = sample_point(m, rng);
    Mat4 pi = m.pi_matrix(pt);
    Vec4 ham{pi[row][0], pi[row][1], pi[row][2], pi[row][3]};
    for (const Mat2x4& jac : {m.jac_source(pt), m.jac_target(pt)}) {
      double push0 = 0, push1 = 0;
      for (int k = 0; k < 4; ++k) {
        push0 += jac[0][k] * ham[k];
        push1 += jac[1][k] * ham[k];
      }
      res = std::max(res, std::max(std::abs(push0 - 0.0), std::abs(push1 - 1.0)));
    }
  }
  report.checks.push_back(make_check("modular-lift", opt.samples, res, opt.tol,
                                     opt.modular_lift_use_hq ? "control: H_q" : "H_p"));
  return report;
}

VerificationReport verify_alpha_group_law(const VerifyOptions& opt) {
  if (opt.samples < 1) throw DomainError("sample count must be at least 1");
  VerificationReport report;
  report.model = "cylinder-two";

  double res_id = 0, res_fix = 0, res_law = 0;
  for (int i = 0; i < opt.samples; ++i) {
    SampleRng rng(opt.seed, static_cast<std::uint64_t>(i));
    bool ok = false;
    for (int attempt = 0; attempt < 256 && !ok; ++attempt) {
      const double r = rng.uniform(-1.7, 1.7);
      const double p = rng.uniform(-0.25, 0.25);
      const double p2 = rng.uniform(-0.25, 0.25);
      try {
        double a1 = alpha_flow(r, p);
        double total = alpha_flow(r, p + p2);
        if (std::abs(a1) > 1.95 || std::abs(total) > 1.95) continue;
        double a2 = alpha_flow(a1, p2);
        res_law = std::max(res_law, std::abs(a2 - total));
        res_id = std::max(res_id, std::abs(alpha_flow(r, 0.0) - r));
        res_fix = std::max(res_fix, std::abs(alpha_flow(1.0, p) - 1.0));
        res_fix = std::max(res_fix, std::abs(alpha_flow(-1.0, p) + 1.0));
        ok = true;
      } catch (const DomainError&) {
        continue;
      }
    }
    if (!ok) throw DomainError("alpha sampling failed");
  }
  report.checks.push_back(make_check("alpha-identity-at-zero-time", opt.samples, res_id, opt.tol));
  report.checks.push_back(make_check("alpha-fixed-points", opt.samples, res_fix, opt.tol));
  report.checks.push_back(make_check("alpha-group-law", opt.samples, res_law, opt.tol));
  return report;
}

double modular_period_numeric(const std::function<double(double)>& f, double r0, double h) {
  if (!(h > 0)) throw DomainError("modular period: step must be positive");
  if (std::abs(f(r0)) > 1e-10) throw DomainError("modular period: f(r0) is not a zero");
  const double deriv = (f(r0 + h) - f(r0 - h)) / (2 * h);
  if (std::abs(deriv) < 1e-8) throw DomainError("modular period: degenerate zero");
  return kTwoPi / std::abs(deriv);
}

TwistProfile default_twist_profile() {
  // Quintic smoothstep ramp: C^2, monotone, flat outside [1, 2].
  TwistProfile p;
  p.f = [](double r) {
    if (r <= 1.0) return 0.0;
    if (r >= 2.0) return kTwoPi;
    const double u = r - 1.0;
    return kTwoPi * (u * u * u * (10.0 + u * (-15.0 + 6.0 * u)));
  };
  return p;
}

Vec2 dehn_twist_map(const TwistProfile& profile, const Vec2& pt) {
  return {pt[0], pt[1] + profile.f(pt[0])};
}

namespace {

void require_ramp(const TwistProfile& profile) {
  for (int i = 0; i <= 400; ++i) {
    const double r = i / 100.0;  // [0, 4]
    const double v = profile.f(r);
    if (r <= 1.0 && std::abs(v) > 1e-12) {
      throw DomainError("twist profile nonzero below the inner boundary");
    }
    if (r >= 2.0 && std::abs(v - kTwoPi) > 1e-12) {
      throw DomainError("twist profile not 2*pi above the outer boundary");
    }
    if (i > 0) {
      const double prev = profile.f((i - 1) / 100.0);
      if (v < prev - 1e-12) throw DomainError("twist profile is decreasing");
    }
  }
}

}  // namespace

VerificationReport verify_twist(const TwistProfile& profile, const VerifyOptions& opt) {
  if (opt.samples < 1) throw DomainError("sample count must be at least 1");
  require_ramp(profile);

  VerificationReport report;
  report.model = "annulus-twist";

  double res_boundary = 0, res_jac = 0, res_fold = 0;
  const double h = 1e-4;  // the map is linear in theta, rounding dominates
  for (int i = 0; i < opt.samples; ++i) {
    SampleRng rng(opt.seed, static_cast<std::uint64_t>(i));
    const double r = rng.uniform(0.0, 3.0);
    const double theta = rng.uniform(0.0, kTwoPi);

    // Identity on both boundary annuli (theta + 2*pi is the same angle).
    for (double rb : {1.0, 2.0, 0.5, 2.5}) {
      Vec2 image = dehn_twist_map(profile, {rb, theta});
      double d = std::max(std::abs(image[0] - rb),
                          std::abs(GroupoidModel::wrap_angle(image[1] - theta)));
      res_boundary = std::max(res_boundary, d);
    }

    // Jacobian determinant by central differences.
    auto at = [&](double rr, double tt) { return dehn_twist_map(profile, {rr, tt}); };
    const double j00 = (at(r + h, theta)[0] - at(r - h, theta)[0]) / (2 * h);
    const double j01 = (at(r, theta + h)[0] - at(r, theta - h)[0]) / (2 * h);
    const double j10 = (at(r + h, theta)[1] - at(r - h, theta)[1]) / (2 * h);
    const double j11 = (at(r, theta + h)[1] - at(r, theta - h)[1]) / (2 * h);
    res_jac = std::max(res_jac, std::abs(j00 * j11 - j01 * j10 - 1.0));

    // k-fold composition = twist with profile k*f, pointwise.
    for (int k = 2; k <= 3; ++k) {
      Vec2 folded{r, theta};
      for (int it = 0; it < k; ++it) folded = dehn_twist_map(profile, folded);
      const double direct = theta + k * profile.f(r);
      res_fold = std::max(res_fold, std::abs(folded[1] - direct));
    }
  }

  report.checks.push_back(make_check("boundary-identity", opt.samples, res_boundary, opt.tol));
  report.checks.push_back(make_check("unit-jacobian-determinant", opt.samples, res_jac, 1e-10));
  report.checks.push_back(make_check("k-fold-composition", opt.samples, res_fold, 1e-12));
  return report;
}

}  // namespace tss
