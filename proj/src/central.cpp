#include "ruledrel/central.hpp"

#include <cmath>

#include "ruledrel/errors.hpp"
#include "ruledrel/normalizations.hpp"
#include "ruledrel/ode.hpp"

namespace ruledrel {

namespace {

void require_nonzero_g(const SmoothFn1& g, double u) {
  if (std::abs(g(u).c0) < 1e-12)
    throw VanishingIngredient("central ingredient g vanishes");
}

// jet of the derivative of a jet-valued function, top coefficient by a
// central difference of the lowest discarded order
Jet3 shift_jet(const std::function<Jet3(double)>& f, double u, double h = 1e-4) {
  const Jet3 a = f(u);
  const double c4 = (f(u + h).c3 - f(u - h).c3) / (2 * h);
  return Jet3{a.c1, a.c2, a.c3, c4};
}

struct ConstancyStat {
  double lo = 1e300, hi = -1e300;
  void add(double x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  double dev() const { return hi - lo; }
};

}  // namespace

CentralInvariants central_invariants(const RuledSurface& surf, const SmoothFn1& g, double u,
                                     double v) {
  if (std::abs(v) < 1e-9) throw ZeroV("central invariants have a pole at v = 0");
  require_nonzero_g(g, u);
  const Jet3 gv = g(u);
  const double d = surf.delta(u).c0;
  const double k = surf.kappa(u).c0;
  const double l = surf.lambda(u).c0;
  CentralInvariants out;
  out.H = gv.c1 / d;
  out.K = out.H * out.H;
  out.S = -gv.c0 * (k * v * v + d * d * (k - l)) / (2 * d * d * v);
  out.J = 3 * (k * gv.c0 * v * v + 2 * d * gv.c1 * v + d * d * gv.c0 * (k - l)) /
          (2 * d * d * v);
  out.umbilic_defect = out.H * out.H - out.K;
  return out;
}

Vec3 darboux_vector(const RuledSurface& surf, double u) {
  const FrameState f = surf.frame_at(u);
  return surf.kappa(u).c0 * f.e + f.z;
}

Vec3 focal_curve_point(const RuledSurface& surf, const SmoothFn1& g, double u) {
  const Jet3 gv = g(u);
  if (std::abs(gv.c1) < 1e-9)
    throw RelativeMinimal("focal curve undefined: g' = 0 (relative minimal normalization)");
  const FrameState f = surf.frame_at(u);
  const double d = surf.delta(u).c0;
  return f.s - (d * gv.c0 / gv.c1) * darboux_vector(surf, u);
}

DarbouxRuledSurface darboux_ruled_surface(const RuledSurface& surf) {
  DarbouxRuledSurface out;
  out.position = [&surf](double u, double t) {
    return surf.frame_at(u).s + t * darboux_vector(surf, u);
  };
  out.striction = [&surf](double u) {
    const Jet3 k = surf.kappa(u);
    if (std::abs(k.c1) < 1e-9)
      throw StationaryKappa("striction of the Darboux-direction surface needs kappa' != 0");
    const FrameState f = surf.frame_at(u);
    const double d = surf.delta(u).c0;
    const double l = surf.lambda(u).c0;
    return f.s - (d * l / k.c1) * darboux_vector(surf, u);
  };
  return out;
}

double darboux_developability_residual(const RuledSurface& surf, const GridSpec& grid) {
  const DarbouxRuledSurface dr = darboux_ruled_surface(surf);
  const double h = 1e-3;
  const Interval udom{surf.u_domain().lo + 2 * h, surf.u_domain().hi - 2 * h};
  double worst = 0.0;
  for_each_node(udom, grid, [&](double u, double t) {
    auto x = dr.position;
    const Vec3 xu = (x(u + h, t) - x(u - h, t)) / (2 * h);
    const Vec3 xt = (x(u, t + h) - x(u, t - h)) / (2 * h);
    const Vec3 nrm = cross(xu, xt);
    if (norm(nrm) < 5e-2) return;  // parametrization singular near the striction curve
    const Vec3 unit = normalized(nrm);
    const Vec3 xuu = (x(u + h, t) - 2.0 * x(u, t) + x(u - h, t)) / (h * h);
    const Vec3 xtt = (x(u, t + h) - 2.0 * x(u, t) + x(u, t - h)) / (h * h);
    const Vec3 xut = (x(u + h, t + h) - x(u + h, t - h) - x(u - h, t + h) + x(u - h, t - h)) /
                     (4 * h * h);
    const double E = dot(xu, xu), F = dot(xu, xt), G = dot(xt, xt);
    const double L = dot(unit, xuu), M = dot(unit, xut), N = dot(unit, xtt);
    worst = std::max(worst, std::abs((L * N - M * M) / (E * G - F * F)));
  });
  return worst;
}

const PredicateResult* CentralPredicateReport::find(const std::string& name) const {
  for (const auto& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

CentralPredicateReport tchebychev_predicates(const RuledSurface& surf, const SmoothFn1& g,
                                             const GridSpec& grid, double tol) {
  CentralPredicateReport rep;

  // structural statistics along u
  double max_k = 0, max_l = 0, max_kl1 = 0, max_inner = 0;
  ConstancyStat dev_g, dev_delta, dev_gsd;
  for_each_u(surf.u_domain(), grid.nu, [&](double u) {
    const double k = surf.kappa(u).c0, l = surf.lambda(u).c0, d = surf.delta(u).c0;
    const double gg = g(u).c0;
    max_k = std::max(max_k, std::abs(k));
    max_l = std::max(max_l, std::abs(l));
    max_kl1 = std::max(max_kl1, std::abs(k * l + 1.0));
    max_inner = std::max(max_inner, std::abs(gg * d * (k * l + 1.0)));
    dev_g.add(gg);
    dev_delta.add(d);
    dev_gsd.add(gg * std::sqrt(std::abs(d)));
  });
  rep.striction_inner_product = max_inner;

  // field-side residuals over the (u, v) grid
  double r_div = 0, r_egen = 0, r_asym = 0, r_tan_u = 0, r_orth_u = 0;
  double r_tan_K = 0, r_orth_K = 0, r_loc = 0;
  for_each_node(surf.u_domain(), grid, [&](double u, double v) {
    const Jet3 dj = surf.delta(u), gj = g(u);
    const double d = dj.c0, d1 = dj.c1, k = surf.kappa(u).c0, l = surf.lambda(u).c0;
    const double gg = gj.c0, g1 = gj.c1;
    const double w2 = d * d + v * v;

    r_div = std::max(r_div, std::abs(gg * (k * v * v - d * d * (k - l)) / (d * d * v)));
    const double e_coeff = (2 * k * gg * v * v + (d1 * gg + 2 * d * g1) * v +
                            2 * k * d * d * gg) / (2 * d * d);
    r_egen = std::max(r_egen, std::abs(e_coeff));

    auto parallel = [&](double vp) {
      return 2 * k * gg * v * v + (d1 * gg + 2 * d * g1) * v + 2 * d * d * k * gg -
             2 * d * gg * (d * l + vp);
    };
    auto orthogonal = [&](double vp) {
      return (d * l + vp) *
                 (2 * k * gg * v * v + (d1 * gg + 2 * d * g1) * v + 2 * k * d * d * gg) +
             2 * d * gg * w2;
    };

    const double vp_asym = (k * v * v + d1 * v + d * d * (k - l)) / (2 * d);
    const double vp_K = -d1 * (d * d - v * v) / (2 * d * v);

    r_asym = std::max(r_asym, std::abs(parallel(vp_asym)));
    r_tan_u = std::max(r_tan_u, std::abs(parallel(0.0)));
    r_orth_u = std::max(r_orth_u, std::abs(orthogonal(0.0)));
    r_tan_K = std::max(r_tan_K, std::abs(parallel(vp_K)));
    r_orth_K = std::max(r_orth_K, std::abs(orthogonal(vp_K)));

    const double quartic =
        2 * k * gg * (d1 * gg - 2 * d * g1) * v * v * v +
        (4 * d * d * gg * gg * (k * l + 1) + d1 * d1 * gg * gg - 4 * d * d * g1 * g1) * v * v +
        2 * d * d * gg * (d1 * gg * (k + l) - 2 * d * g1 * (k - l)) * v +
        4 * d * d * d * d * gg * gg * (k * l + 1);
    r_loc = std::max(r_loc, std::abs(quartic));
  });

  auto push = [&](std::string name, double lhs, double rhs) {
    rep.items.push_back({std::move(name), lhs, lhs < tol, rhs, rhs < tol});
  };
  push("incompressible_iff_right_conoid", r_div, std::max(max_k, max_l));
  push("orthogonal_to_generators", r_egen, std::max(max_k, dev_gsd.dev()));
  push("tangent_to_curved_asymptotics", r_asym, std::max({max_k, max_l, dev_g.dev()}));
  push("tangent_to_u_curves", r_tan_u, std::max({max_k, max_l, dev_gsd.dev()}));
  push("orthogonal_to_u_curves", r_orth_u, std::max(max_kl1, dev_gsd.dev()));
  push("tangent_to_gauss_curves", r_tan_K, std::max({max_k, max_l, dev_delta.dev(), dev_g.dev()}));
  push("orthogonal_to_gauss_curves", r_orth_K,
       std::max({max_kl1, dev_delta.dev(), dev_g.dev()}));
  push("tangent_to_lines_of_curvature", r_loc,
       std::max({max_kl1, dev_delta.dev(), dev_g.dev()}));
  return rep;
}

CentralImage central_image(const RuledSurface& surf, const SmoothFn1& g) {
  for_each_u(surf.u_domain(), 201, [&](double u) {
    if (std::abs(g(u).c1) < 1e-9)
      throw RelativeMinimal("central image undefined: g' vanishes (relative minimal)");
  });

  CentralImage out;
  const SmoothFn1 kappa = surf.kappa_fn();
  out.kappa1 = kappa;
  out.delta1 = SmoothFn1([g](double u) { return -shift_jet(g, u); });
  out.lambda1 = SmoothFn1([g, kappa](double u) {
    auto kg = [g, kappa](double t) { return kappa(t) * g(t); };
    return shift_jet(kg, u) / shift_jet(g, u);
  });
  out.surface1 =
      std::make_shared<RuledSurface>(out.delta1, out.kappa1, out.lambda1, surf.u_domain());

  const SmoothFn1 delta = surf.delta_fn();
  out.striction1 = [&surf, g](double u) { return -g(u).c0 * darboux_vector(surf, u); };
  out.v1 = [g, delta](double u, double v) { return -g(u).c1 * v / delta(u).c0; };
  out.w1 = [g, delta, &surf](double u, double v) {
    return std::abs(g(u).c1 / delta(u).c0) * surf.w(u, v);
  };
  auto striction = out.striction1;
  auto v1 = out.v1;
  out.embedding = [&surf, striction, v1](double u, double v) {
    return striction(u) + v1(u, v) * surf.frame_at(u).e;
  };
  return out;
}

CentralSphereReport central_sphere_tests(const RuledSurface& surf, const SmoothFn1& g,
                                         const GridSpec& grid) {
  CentralSphereReport rep;
  ConstancyStat dev_g, dev_k, dev_c, dev_c1;
  bool g_stationary = false;
  const SmoothFn1 dint = antiderivative(surf.delta_fn(), surf.u0(), surf.u_domain());
  std::vector<double> us;
  for_each_u(surf.u_domain(), grid.nu, [&](double u) { us.push_back(u); });
  for (double u : us) {
    dev_g.add(g(u).c0);
    dev_k.add(surf.kappa(u).c0);
    if (std::abs(g(u).c1) < 1e-12) g_stationary = true;
  }
  rep.improper_residual = std::max(dev_g.dev(), dev_k.dev());
  rep.improper = rep.improper_residual < 1e-7;

  if (!g_stationary) {
    for (double u : us) dev_c.add(-surf.delta(u).c0 / g(u).c1);
    const double c = 0.5 * (dev_c.lo + dev_c.hi);
    for (double u : us) dev_c1.add(c * g(u).c0 + dint(u).c0);
    const double c1 = 0.5 * (dev_c1.lo + dev_c1.hi);
    double cond = 0;
    for (double u : us) {
      const double d = surf.delta(u).c0, k = surf.kappa(u).c0, l = surf.lambda(u).c0;
      cond = std::max(cond,
                      std::abs(d * (k - l) + surf.kappa(u).c1 * (dint(u).c0 - c * c1)));
    }
    rep.c = c;
    rep.c1 = c1;
    rep.proper_residual = std::max({dev_c.dev(), dev_c1.dev(), cond});
    rep.proper = rep.proper_residual < 1e-7;
  } else {
    rep.proper = false;
    rep.proper_residual = 1e300;
  }

  const SupportField q = make_central(surf, g);
  rep.detector_improper = is_improper_sphere(surf, q, grid).has_value();
  rep.detector_proper = is_proper_sphere(surf, q, grid).has_value();
  return rep;
}

std::optional<InverseProblem> inverse_problem(const RuledSurface& surf, double tol) {
  const SmoothFn1 dint = antiderivative(surf.delta_fn(), surf.u0(), surf.u_domain());
  const int n = 201;
  double max_kp = 0;
  for_each_u(surf.u_domain(), n,
             [&](double u) { max_kp = std::max(max_kp, std::abs(surf.kappa(u).c1)); });

  double c1 = 0;
  if (max_kp < 1e-9) {
    // kappa' = 0: solvable iff kappa = lambda; c1 is free
    double mism = 0, dmax = -1e300;
    for_each_u(surf.u_domain(), n, [&](double u) {
      mism = std::max(mism, std::abs(surf.delta(u).c0 *
                                     (surf.kappa(u).c0 - surf.lambda(u).c0)));
      dmax = std::max(dmax, dint(u).c0);
    });
    if (mism > tol) return std::nullopt;
    c1 = dmax + 1.0;  // keeps g* = c1 - int delta positive
  } else {
    // pointwise c1 = int delta + delta (kappa - lambda) / kappa', then constancy
    ConstancyStat stat;
    bool undefined = false;
    for_each_u(surf.u_domain(), n, [&](double u) {
      const double kp = surf.kappa(u).c1;
      if (std::abs(kp) < 1e-12) {
        undefined = true;
        return;
      }
      stat.add(dint(u).c0 +
               surf.delta(u).c0 * (surf.kappa(u).c0 - surf.lambda(u).c0) / kp);
    });
    if (undefined || stat.dev() > tol * std::max(1.0, std::abs(stat.hi)))
      return std::nullopt;
    c1 = 0.5 * (stat.lo + stat.hi);
  }

  InverseProblem out;
  out.c1 = c1;
  out.g_star = SmoothFn1([dint, c1](double u) { return Jet3::constant(c1) - dint(u); });
  double resid = 0;
  for_each_u(surf.u_domain(), n, [&](double u) {
    resid = std::max(resid,
                     std::abs(surf.delta(u).c0 * (surf.kappa(u).c0 - surf.lambda(u).c0) -
                              surf.kappa(u).c1 * (c1 - dint(u).c0)));
  });
  out.residual = resid;
  // any skew surface with the same generators works; reuse the invariants
  out.psi_star = std::make_shared<RuledSurface>(surf.delta_fn(), surf.kappa_fn(),
                                                surf.lambda_fn(), surf.u_domain());
  return out;
}

}  // namespace ruledrel
