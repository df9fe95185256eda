#include "ruledrel/relnorm.hpp"

#include <cmath>

#include "ruledrel/errors.hpp"

namespace ruledrel {

namespace {

// everything the closed forms consume at one point
struct Point {
  double v = 0;
  double w = 0, w2 = 0, w4 = 0;
  double d = 0, d1 = 0, d2 = 0;  // delta, delta', delta''
  double k = 0, k1 = 0;          // kappa, kappa'
  double l = 0;                  // lambda
  double q = 0, q1 = 0, qv = 0, q11 = 0, q1v = 0, qvv = 0;
};

Point at(const RuledSurface& surf, const SupportField& q, double u, double v) {
  Point p;
  p.v = v;
  const Jet3 d = surf.delta(u);
  const Jet3 k = surf.kappa(u);
  p.d = d.c0;
  p.d1 = d.c1;
  p.d2 = d.c2;
  p.k = k.c0;
  p.k1 = k.c1;
  p.l = surf.lambda(u).c0;
  p.w2 = p.d * p.d + v * v;
  p.w = std::sqrt(p.w2);
  p.w4 = p.w2 * p.w2;
  const Jet2 qq = q.checked_jet(u, v);
  p.q = qq.v;
  p.q1 = qq.du;
  p.qv = qq.dv;
  p.q11 = qq.duu;
  p.q1v = qq.duv;
  p.qvv = qq.dvv;
  return p;
}

RelativeNormal normal_of(const Point& p) {
  return {-p.w * (p.d * p.q1 + p.qv * (p.k * p.w2 + p.d1 * p.v)) / (p.d * p.d),
          (p.d * p.d * p.q - p.w2 * p.v * p.qv) / (p.d * p.w),
          -(p.v * p.q + p.w2 * p.qv) / p.w};
}

ShapeOperator shape_of(const Point& p) {
  const double d = p.d, d1 = p.d1, d2 = p.d2, k = p.k, k1 = p.k1, l = p.l;
  const double v = p.v, w2 = p.w2, w3 = p.w2 * p.w, w4 = p.w4;
  const double q = p.q, q1 = p.q1, qv = p.qv, q11 = p.q11, q1v = p.q1v, qvv = p.qvv;

  ShapeOperator B;
  B.b[0][0] = -(d * d * d1 * q * v + k * w2 * (d * d * q - v * w2 * qv) -
                d * w2 * (d * d1 * qv + v * q1 + w2 * q1v)) /
              (d * d * w3);
  B.b[0][1] = (d * d * d * d * w2 * q - d * d * v * w4 * qv -
               d1 * w2 * (d * d + 2 * v * v) * (qv * (k * w2 + d1 * v) + d * q1) +
               d * d * l *
                   (d * d * d1 * (q * v + w2 * qv) + k * w2 * (d * d * q - v * w2 * qv) -
                    d * w2 * (2 * d * d1 * qv + q1 * v + w2 * q1v)) +
               d * w4 *
                   (qv * (2 * d * d1 * k + k1 * w2 + d2 * v) + d1 * q1 +
                    q1v * (k * w2 + d1 * v) + d * q11)) /
              (d * d * d * w3);
  B.b[1][0] = (2 * qv * v * w2 + d * d * q + w4 * qvv) / (d * w3);
  B.b[1][1] = (-d * d * l * (2 * qv * v * w2 + d * d * q + w4 * qvv) +
               v * w2 * (qv * (k * w2 + d1 * v) + d * q1) +
               w4 * (qv * (2 * k * v + d1) + qvv * (k * w2 + d1 * v) + d * q1v)) /
              (d * d * w3);
  return B;
}

double pick_of(const Point& p) {
  const double d = p.d, d1 = p.d1, k = p.k, l = p.l;
  const double v = p.v, w2 = p.w2, w3 = p.w2 * p.w;
  const double q = p.q, q1 = p.q1, qv = p.qv;
  return 3 * (w2 * qv + v * q) / (2 * d * d * w3 * q) *
         (w2 * (k * q * v + 2 * d * q1 + qv * (k * w2 + d1 * v - d * d * l)) -
          d * d * q * (l * v - d1));
}

double mean_of(const Point& p) {
  const double d = p.d, d1 = p.d1, k = p.k, l = p.l;
  const double v = p.v, w2 = p.w2, w3 = p.w2 * p.w, w4 = p.w4;
  const double q = p.q, q1 = p.q1, qv = p.qv, q1v = p.q1v, qvv = p.qvv;
  return (-d * d * q * (k * w2 + d1 * v + d * d * l) +
          2 * w2 * qv * ((2 * k * v + d1) * w2 - d * d * l * v) +
          w4 * qvv * (k * w2 + d1 * v - d * d * l) + 2 * d * v * w2 * q1 +
          2 * d * w4 * q1v) /
         (2 * d * d * w3);
}

// Relative curvature. The closed form is assembled from four products of
// first-order data; the final group carries the factor delta that makes the
// combination equal det B.
double gauss_of(const Point& p) {
  const double d = p.d, d1 = p.d1, d2 = p.d2, k = p.k, k1 = p.k1, l = p.l;
  const double v = p.v, w2 = p.w2, w4 = p.w4;
  const double q = p.q, q1 = p.q1, qv = p.qv, q11 = p.q11, q1v = p.q1v, qvv = p.qvv;

  const double term1 =
      l * d * d * (-2 * v * v * v * qv - d * d * (q + 2 * v * qv) - w4 * qvv) +
      v * w2 * (qv * (k * w2 + d1 * v) + d * q1) +
      w4 * (qv * (2 * k * v + d1) + qvv * (k * w2 + d1 * v) + d * q1v);
  const double term2 = d * d * d1 * (q * v + w2 * qv) + k * w2 * (d * d * q - v * w2 * qv) -
                       d * w2 * (2 * d * d1 * qv + v * q1 + w2 * q1v);
  const double term3 = -2 * qv * v * v * v - d * d * (q + 2 * v * qv) - w4 * qvv;
  const double term4 =
      d * d * d * d * w2 * q - d * d * v * w4 * qv +
      d * d * d1 * w2 * (qv * (k * w2 + d1 * v) + d * q1) -
      2 * d1 * w4 * (qv * (k * w2 + d1 * v) + d * q1) +
      d * l *
          (d * d * d * d1 * (q * v + w2 * qv) + d * k * w2 * (d * d * q - v * w2 * qv) -
           d * d * w2 * (2 * d * d1 * qv + v * q1 + w2 * q1v)) +
      d * w4 * (qv * (2 * d * d1 * k + k1 * w2 + d2 * v) + d1 * q1 + d * q11 +
                q1v * (k * w2 + d1 * v));
  return -(term1 * term2 - term3 * term4) / (d * d * d * d * w4 * w2);
}

double scalar_of(const Point& p) {
  const double d = p.d, d1 = p.d1, k = p.k, l = p.l;
  const double v = p.v, w2 = p.w2, w3 = p.w2 * p.w, w4 = p.w4;
  const double q = p.q, q1 = p.q1, qv = p.qv, q1v = p.q1v, qvv = p.qvv;
  return (q * q * (-k * w4 + d * d * (l * v * v - 2 * d1 * v - d * d * l)) +
          w4 * q * qv * (2 * k * v + d1) +
          w4 * (k * w2 + d1 * v - d * d * l) * (q * qvv - qv * qv) - 2 * d * w4 * q1 * qv +
          2 * d * w4 * q * q1v) /
         (2 * d * d * w3 * q);
}

struct TPair {
  double T1, T2;
};

TPair t_of(const Point& p) {
  const double d = p.d, d1 = p.d1, k = p.k, l = p.l;
  const double v = p.v, w = p.w, w2 = p.w2;
  const double q = p.q, q1 = p.q1, qv = p.qv;
  const double T1 = (w2 * qv + v * q) / (d * w);
  const double T2 = (2 * d * w2 * q1 + d1 * q * (d * d - v * v)) / (2 * d * d * w) +
                    T1 * (k * w2 + d1 * v - d * d * l) / d;
  return {T1, T2};
}

// second-order first derivative that stays inside [dom.lo, dom.hi]
double fd_clamped(const std::function<double(double)>& f, double x, double h, Interval dom) {
  if (x + h <= dom.hi + 1e-12 && x - h >= dom.lo - 1e-12)
    return (f(x + h) - f(x - h)) / (2 * h);
  if (x + h > dom.hi + 1e-12)
    return (3 * f(x) - 4 * f(x - h) + f(x - 2 * h)) / (2 * h);
  return (-3 * f(x) + 4 * f(x + h) - f(x + 2 * h)) / (2 * h);
}

}  // namespace

RelativeNormal relative_normal(const RuledSurface& surf, const SupportField& q, double u,
                               double v) {
  return normal_of(at(surf, q, u, v));
}

Vec3 relative_normal_world(const RuledSurface& surf, const SupportField& q, double u, double v) {
  const RelativeNormal y = relative_normal(surf, q, u, v);
  return y.frame().world(surf.frame_at(u));
}

RelMetric relative_metric(const RuledSurface& surf, const SupportField& q, double u, double v) {
  const Point p = at(surf, q, u, v);
  const FundamentalForms ff = surf.fundamental_forms(u, v);
  RelMetric m;
  m.G11 = ff.h11 / p.q;
  m.G12 = ff.h12 / p.q;
  m.G22 = 0.0;
  m.Ginv11 = 0.0;
  m.Ginv12 = p.w * p.q / p.d;
  m.Ginv22 = p.w * p.q * (p.k * p.w2 + p.d1 * p.v - p.d * p.d * p.l) / (p.d * p.d);
  m.detG = -p.d * p.d / (p.w2 * p.q * p.q);
  return m;
}

DarbouxComponents darboux_components(const RuledSurface& surf, const SupportField& q, double u,
                                     double v) {
  const Point p = at(surf, q, u, v);
  const double d = p.d, d1 = p.d1, k = p.k, l = p.l;
  const double w2 = p.w2, w3 = p.w2 * p.w;
  const double core = w2 * p.qv + p.q * p.v;
  const double bracket = k * p.v * p.v + d1 * p.v + d * d * (k - l);
  const double flux = w2 * p.q1 + d * d1 * p.q;
  DarbouxComponents a;
  a.A112 = -(core * bracket + d1 * w2 * p.q - 2 * d * flux) / (2 * p.q * p.q * w3);
  a.A112_up = p.q / (d * d) * core;
  a.A122 = d * core / (w3 * p.q * p.q);
  a.A122_up = p.q / (2 * d * d * d) * (3 * core * bracket - d1 * w2 * p.q + 2 * d * flux);
  return a;
}

double pick_invariant(const RuledSurface& surf, const SupportField& q, double u, double v) {
  return pick_of(at(surf, q, u, v));
}

double pick_invariant_assembled(const RuledSurface& surf, const SupportField& q, double u,
                                double v) {
  const DarbouxComponents a = darboux_components(surf, q, u, v);
  // A^111 and A_222 vanish, so only the multiplicity-3 pairs contribute
  return 1.5 * (a.A112 * a.A112_up + a.A122 * a.A122_up);
}

ShapeOperator shape_operator(const RuledSurface& surf, const SupportField& q, double u,
                             double v) {
  return shape_of(at(surf, q, u, v));
}

RelCurvatures rel_curvatures(const RuledSurface& surf, const SupportField& q, double u,
                             double v) {
  const Point p = at(surf, q, u, v);
  return {gauss_of(p), mean_of(p)};
}

double scalar_curvature(const RuledSurface& surf, const SupportField& q, double u, double v) {
  return scalar_of(at(surf, q, u, v));
}

TchebychevField tchebychev(const RuledSurface& surf, const SupportField& q, double u, double v) {
  const Point p = at(surf, q, u, v);
  const TPair t = t_of(p);
  TchebychevField out;
  out.T1 = t.T1;
  out.T2 = t.T2;
  const double core = p.v * p.q + p.w2 * p.qv;
  out.frame.e = p.w *
                (p.q * (2 * p.k * p.v + p.d1) + 2 * p.d * p.q1 +
                 2 * p.qv * (p.k * p.w2 + p.d1 * p.v)) /
                (2 * p.d * p.d);
  out.frame.n = core * p.v / (p.d * p.w);
  out.frame.z = core / p.w;
  return out;
}

double divergence_T(const RuledSurface& surf, const SupportField& q, double u, double v,
                    double h) {
  const Point p = at(surf, q, u, v);
  const double W = std::abs(p.d) / (p.w * std::abs(p.q));

  auto weighted_T1 = [&](double uu) {
    const Point pp = at(surf, q, uu, v);
    return std::abs(pp.d) / (pp.w * std::abs(pp.q)) * t_of(pp).T1;
  };
  auto weighted_T2 = [&](double vv) {
    const Point pp = at(surf, q, u, vv);
    return std::abs(pp.d) / (pp.w * std::abs(pp.q)) * t_of(pp).T2;
  };

  const double du = fd_clamped(weighted_T1, u, h, surf.u_domain());
  const double dv = fd_clamped(weighted_T2, v, h, Interval{-1e300, 1e300});
  return (du + dv) / W;
}

RelInvariants rel_invariants(const RuledSurface& surf, const SupportField& q, double u,
                             double v) {
  const Point p = at(surf, q, u, v);
  RelInvariants out;
  out.J = pick_of(p);
  out.K = gauss_of(p);
  out.H = mean_of(p);
  out.S = scalar_of(p);
  const TchebychevField t = tchebychev(surf, q, u, v);
  out.T1 = t.T1;
  out.T2 = t.T2;
  out.T_frame = t.frame;
  out.divT = divergence_T(surf, q, u, v);
  out.B = shape_of(p);
  return out;
}

}  // namespace ruledrel
