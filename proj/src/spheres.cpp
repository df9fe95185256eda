#include "ruledrel/spheres.hpp"

#include <array>
#include <cmath>
#include <memory>

#include "ruledrel/errors.hpp"
#include "ruledrel/ode.hpp"
#include "ruledrel/normalizations.hpp"

namespace ruledrel {

namespace {

void require_conoidal(const RuledSurface& surf, bool want_conoidal) {
  double max_k = 0;
  for_each_u(surf.u_domain(), 201,
             [&](double u) { max_k = std::max(max_k, std::abs(surf.kappa(u).c0)); });
  if (want_conoidal && max_k > 1e-10)
    throw NotConoidal("construction requires kappa = 0");
  if (!want_conoidal) {
    double min_k = 1e300;
    for_each_u(surf.u_domain(), 201,
               [&](double u) { min_k = std::min(min_k, std::abs(surf.kappa(u).c0)); });
    if (min_k < 1e-10)
      throw ConoidalSurface("construction requires kappa != 0 on the whole domain");
  }
}

// second-order u-derivative stencil that respects the domain
double fd_u(const std::function<double(double)>& f, double x, double h, Interval dom) {
  if (x + h <= dom.hi + 1e-12 && x - h >= dom.lo - 1e-12)
    return (f(x + h) - f(x - h)) / (2 * h);
  if (x + h > dom.hi + 1e-12) return (3 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / (2 * h);
  return (-3 * f(x) + 4 * f(x + h) - f(x + 2 * h)) / (2 * h);
}

bool solve4(std::array<std::array<double, 4>, 4>& A, std::array<double, 4>& b) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(A[r][col]) > std::abs(A[pivot][col])) pivot = r;
    if (std::abs(A[pivot][col]) < 1e-14) return false;
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const double m = A[r][col] / A[col][col];
      for (int c = col; c < 4; ++c) A[r][c] -= m * A[col][c];
      b[r] -= m * b[col];
    }
  }
  for (int i = 0; i < 4; ++i) b[i] /= A[i][i];
  return true;
}

}  // namespace

std::optional<SphereCertificate> is_improper_sphere(const RuledSurface& surf,
                                                    const SupportField& q,
                                                    const GridSpec& grid, double tol,
                                                    ImproperClosure* closure) {
  bool first = true;
  Vec3 y_ref;
  double residual = 0.0;
  ImproperClosure cl;
  const double h = 1e-5;
  const Interval dom = surf.u_domain();
  for_each_node(dom, grid, [&](double u, double v) {
    const Vec3 y = relative_normal_world(surf, q, u, v);
    if (first) {
      y_ref = y;
      first = false;
    }
    residual = std::max(residual, norm(y - y_ref));
    if (closure) {
      const RelativeNormal yc = relative_normal(surf, q, u, v);
      auto y1_of_u = [&](double t) { return relative_normal(surf, q, t, v).y1; };
      auto y2_of_u = [&](double t) { return relative_normal(surf, q, t, v).y2; };
      auto y3_of_u = [&](double t) { return relative_normal(surf, q, t, v).y3; };
      const double y11 = fd_u(y1_of_u, u, h, dom);
      (void)y2_of_u;
      const double y31 = fd_u(y3_of_u, u, h, dom);
      const double y12 = (relative_normal(surf, q, u, v + h).y1 -
                          relative_normal(surf, q, u, v - h).y1) / (2 * h);
      const double y32 = (relative_normal(surf, q, u, v + h).y3 -
                          relative_normal(surf, q, u, v - h).y3) / (2 * h);
      const double k = surf.kappa(u).c0;
      cl.max_y11_minus_y2 = std::max(cl.max_y11_minus_y2, std::abs(y11 - yc.y2));
      cl.max_ky2_plus_y31 = std::max(cl.max_ky2_plus_y31, std::abs(k * yc.y2 + y31));
      cl.max_y12 = std::max(cl.max_y12, std::abs(y12));
      cl.max_y32 = std::max(cl.max_y32, std::abs(y32));
    }
  });
  if (closure) *closure = cl;
  if (residual >= tol) return std::nullopt;
  return SphereCertificate{SphereKind::improper, 0.0, y_ref, residual};
}

std::optional<SphereCertificate> is_proper_sphere(const RuledSurface& surf,
                                                  const SupportField& q, const GridSpec& grid,
                                                  double tol) {
  // least squares over x = c y + a: unknowns (c, a)
  std::array<std::array<double, 4>, 4> ata{};
  std::array<double, 4> atb{};
  std::vector<std::pair<Vec3, Vec3>> samples;  // (x, y)
  for_each_node(surf.u_domain(), grid, [&](double u, double v) {
    const Vec3 x = surf.position(u, v);
    const Vec3 y = relative_normal_world(surf, q, u, v);
    samples.emplace_back(x, y);
    const double yy[3] = {y.x, y.y, y.z};
    const double xx[3] = {x.x, x.y, x.z};
    for (int axis = 0; axis < 3; ++axis) {
      // row: c * y_axis + a_axis = x_axis
      double row[4] = {yy[axis], 0, 0, 0};
      row[1 + axis] = 1.0;
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) ata[i][j] += row[i] * row[j];
        atb[i] += row[i] * xx[axis];
      }
    }
  });
  if (samples.size() < 12) return std::nullopt;
  if (!solve4(ata, atb)) return std::nullopt;
  const double c = atb[0];
  const Vec3 center{atb[1], atb[2], atb[3]};
  if (!(std::abs(c) > 1e-12) || !std::isfinite(c)) return std::nullopt;

  double residual = 0.0;
  for (const auto& [x, y] : samples) residual = std::max(residual, norm(x - c * y - center));
  if (residual >= tol) return std::nullopt;

  // the shape operator of a proper sphere is -(1/c) I
  double op_dev = 0.0;
  for_each_node(surf.u_domain(), grid, [&](double u, double v) {
    const ShapeOperator B = shape_operator(surf, q, u, v);
    op_dev = std::max(op_dev, std::abs(B.b[0][0] + 1.0 / c));
    op_dev = std::max(op_dev, std::abs(B.b[1][1] + 1.0 / c));
    op_dev = std::max(op_dev, std::abs(B.b[0][1]));
    op_dev = std::max(op_dev, std::abs(B.b[1][0]));
    const RelCurvatures kh = rel_curvatures(surf, q, u, v);
    op_dev = std::max(op_dev, std::abs(kh.H + 1.0 / c));
    op_dev = std::max(op_dev, std::abs(kh.K - 1.0 / (c * c)));
  });
  if (op_dev >= 1e-6) return std::nullopt;

  return SphereCertificate{SphereKind::proper, c, center, residual};
}

double right_pick_invariant(const RuledSurface& surf, const SmoothFn1& f, const SmoothFn1& g,
                            double u, double v) {
  const Jet3 fv = f(u), gv = g(u);
  const Jet3 d = surf.delta(u);
  const double k = surf.kappa(u).c0, l = surf.lambda(u).c0;
  const double denom = 2 * d.c0 * d.c0 * (gv.c0 * v + fv.c0);
  if (std::abs(denom) < 1e-14) throw ZeroSupport("gv + f vanishes");
  return 3 * gv.c0 *
         (gv.c0 * (k * v * v + d.c0 * d.c0 * (k - l)) - d.c1 * fv.c0 +
          2 * d.c0 * (gv.c1 * v + fv.c1)) /
         denom;
}

RightNormalization build_improper_conoidal(const RuledSurface& surf, double c1, double c2,
                                           double c3) {
  require_conoidal(surf, true);
  if (c1 * c1 + c2 * c2 + c3 * c3 == 0.0)
    throw VanishingIngredient("c1, c2, c3 must not all vanish");
  const SmoothFn1 delta = surf.delta_fn();
  SmoothFn1 f([delta, c1, c2](double u) {
    const Jet3 uu = Jet3::variable(u);
    return delta(u) * (c1 * cos(uu) + c2 * sin(uu));
  });
  SmoothFn1 g = SmoothFn1::constant(c3);
  return {make_right(surf, f, g), f, g};
}

RightNormalization build_improper_nonconoidal(const RuledSurface& surf, double g0, double g0p,
                                              double g0pp) {
  require_conoidal(surf, false);
  const SmoothFn1 kappa = surf.kappa_fn();
  const SmoothFn1 delta = surf.delta_fn();
  const double u0 = surf.u0();
  const double k0 = kappa(u0).c0, k0p = kappa(u0).c1;

  // state (g, h, p) with h = g'/kappa:  g' = kappa h, h' = p,
  // p' = -h - (kappa g)' = -h - kappa' g - kappa^2 h
  OdeTable::State y0 = {g0, g0p / k0, (g0pp * k0 - g0p * k0p) / (k0 * k0)};
  auto rhs = [kappa](double u, const OdeTable::State& y, OdeTable::State& dy) {
    const Jet3 k = kappa(u);
    dy[0] = k.c0 * y[1];
    dy[1] = y[2];
    dy[2] = -y[1] - k.c1 * y[0] - k.c0 * k.c0 * y[1];
  };
  auto table = std::make_shared<OdeTable>(rhs, y0, u0, surf.u_domain(), 1e-3, nullptr,
                                          /*pad=*/2e-2);

  // h as a jet: (h, p, p', p'') with the primes supplied by the system itself
  auto h_jet = [table, kappa](double u) {
    const OdeTable::State s = table->state_at(u);
    const Jet3 k = kappa(u);
    const double g = s[0], h = s[1], p = s[2];
    const double gp = k.c0 * h;
    const double pp = -h - k.c1 * g - k.c0 * k.c0 * h;
    const double ppp = -p - k.c2 * g - k.c1 * gp - 2 * k.c0 * k.c1 * h - k.c0 * k.c0 * p;
    return Jet3{h, p, pp, ppp};
  };
  SmoothFn1 g_fn([table, kappa, h_jet](double u) {
    const OdeTable::State s = table->state_at(u);
    const Jet3 gp = kappa(u) * h_jet(u);  // jet of g' = kappa h
    return Jet3{s[0], gp.c0, gp.c1, gp.c2};
  });
  SmoothFn1 f_fn([delta, h_jet](double u) { return delta(u) * h_jet(u); });
  return {make_right(surf, f_fn, g_fn), f_fn, g_fn};
}

RightNormalization build_proper_conoidal(const RuledSurface& surf, double c, double c1,
                                         double c2, double c3) {
  require_conoidal(surf, true);
  if (c == 0.0) throw VanishingIngredient("homothety constant c must be nonzero");
  const SmoothFn1 delta = surf.delta_fn();
  const SmoothFn1 lambda = surf.lambda_fn();
  const double u0 = surf.u0();
  const Interval dom = surf.u_domain();

  const SmoothFn1 dint = antiderivative(delta, u0, dom);
  SmoothFn1 dls([delta, lambda](double u) {
    return delta(u) * lambda(u) * sin(Jet3::variable(u));
  });
  SmoothFn1 dlc([delta, lambda](double u) {
    return delta(u) * lambda(u) * cos(Jet3::variable(u));
  });
  const SmoothFn1 a1 = antiderivative(dls, u0, dom);
  const SmoothFn1 a2 = antiderivative(dlc, u0, dom);

  SmoothFn1 g_fn([dint, c, c3](double u) { return (c3 - dint(u)) / c; });
  SmoothFn1 f_fn([delta, a1, a2, c, c1, c2](double u) {
    const Jet3 uu = Jet3::variable(u);
    return delta(u) * (cos(uu) * (c1 + a1(u)) + sin(uu) * (c2 - a2(u))) / c;
  });
  return {make_right(surf, f_fn, g_fn), f_fn, g_fn};
}

RightNormalization build_proper_nonconoidal(const RuledSurface& surf, double c, double g0,
                                            double g0p, double g0pp) {
  require_conoidal(surf, false);
  if (c == 0.0) throw VanishingIngredient("homothety constant c must be nonzero");
  const SmoothFn1 kappa = surf.kappa_fn();
  const SmoothFn1 delta = surf.delta_fn();
  const SmoothFn1 lambda = surf.lambda_fn();
  const double u0 = surf.u0();
  const Jet3 k0 = kappa(u0), d0 = delta(u0);

  // state (g, P, Pp) with P = (delta + c g')/(c kappa):
  //   g' = kappa P - delta / c,  P' = Pp,
  //   Pp' = -P - (kappa g)' - delta lambda / c
  OdeTable::State y0 = {
      g0, (d0.c0 + c * g0p) / (c * k0.c0),
      ((d0.c1 + c * g0pp) * k0.c0 - (d0.c0 + c * g0p) * k0.c1) / (c * k0.c0 * k0.c0)};
  auto rhs = [kappa, delta, lambda, c](double u, const OdeTable::State& y,
                                       OdeTable::State& dy) {
    const double k = kappa(u).c0, k1 = kappa(u).c1;
    const double d = delta(u).c0, l = lambda(u).c0;
    const double gp = k * y[1] - d / c;
    dy[0] = gp;
    dy[1] = y[2];
    dy[2] = -y[1] - k1 * y[0] - k * gp - d * l / c;
  };
  auto table = std::make_shared<OdeTable>(rhs, y0, u0, surf.u_domain(), 1e-3, nullptr,
                                          /*pad=*/2e-2);

  auto p_jet = [table, kappa, delta, lambda, c](double u) {
    const OdeTable::State s = table->state_at(u);
    const Jet3 k = kappa(u), d = delta(u), l = lambda(u);
    const double g = s[0], P = s[1], Pp = s[2];
    const double gp = k.c0 * P - d.c0 / c;
    const double Ppp = -P - k.c1 * g - k.c0 * gp - d.c0 * l.c0 / c;
    const double gpp = k.c1 * P + k.c0 * Pp - d.c1 / c;
    const double Pppp = -Pp - (k.c2 * g + 2 * k.c1 * gp + k.c0 * gpp) -
                        (d.c1 * l.c0 + d.c0 * l.c1) / c;
    return Jet3{P, Pp, Ppp, Pppp};
  };
  SmoothFn1 g_fn([table, kappa, delta, c, p_jet](double u) {
    const OdeTable::State s = table->state_at(u);
    const Jet3 gp = kappa(u) * p_jet(u) - delta(u) / c;  // jet of g'
    return Jet3{s[0], gp.c0, gp.c1, gp.c2};
  });
  SmoothFn1 f_fn([delta, p_jet](double u) { return delta(u) * p_jet(u); });
  return {make_right(surf, f_fn, g_fn), f_fn, g_fn};
}

std::optional<ConstantlyLinkedReport> constantly_linked(const RuledSurface& surf,
                                                        const SupportField& q,
                                                        const GridSpec& grid, double tol) {
  bool first = true;
  RelativeNormal ref;
  ConstantlyLinkedReport rep;
  double s_vy = 0, s_vv = 0, s_vd = 0, s_dy = 0, s_dd = 0;  // LS for q w = c1 v + c2 delta
  for_each_node(surf.u_domain(), grid, [&](double u, double v) {
    const RelativeNormal y = relative_normal(surf, q, u, v);
    if (first) {
      ref = y;
      first = false;
    }
    rep.component_residual = std::max(
        rep.component_residual,
        std::max({std::abs(y.y1 - ref.y1), std::abs(y.y2 - ref.y2), std::abs(y.y3 - ref.y3)}));
    const double d = surf.delta(u).c0;
    const double target = q.value(u, v) * surf.w(u, v);
    s_vy += v * target;
    s_dy += d * target;
    s_vv += v * v;
    s_vd += v * d;
    s_dd += d * d;
  });
  if (rep.component_residual >= tol) return std::nullopt;

  const double det = s_vv * s_dd - s_vd * s_vd;
  if (std::abs(det) < 1e-14) return std::nullopt;
  rep.c1 = (s_vy * s_dd - s_dy * s_vd) / det;
  rep.c2 = (s_dy * s_vv - s_vy * s_vd) / det;

  for_each_node(surf.u_domain(), grid, [&](double u, double v) {
    const double d = surf.delta(u).c0;
    const double fit = (rep.c1 * v + rep.c2 * d) / surf.w(u, v);
    rep.fit_residual = std::max(rep.fit_residual, std::abs(fit - q.value(u, v)));
    rep.max_H = std::max(rep.max_H, std::abs(rel_curvatures(surf, q, u, v).H));
  });
  for_each_u(surf.u_domain(), grid.nu,
             [&](double u) { rep.max_kappa = std::max(rep.max_kappa, std::abs(surf.kappa(u).c0)); });
  if (rep.fit_residual >= tol) return std::nullopt;
  if (std::abs(rep.c2) > 1e-12) rep.circle_radius = 1.0 / std::abs(rep.c2);
  return rep;
}

}  // namespace ruledrel
