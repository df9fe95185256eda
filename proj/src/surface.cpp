#include "ruledrel/surface.hpp"

#include <cmath>

#include "ruledrel/errors.hpp"

namespace ruledrel {

namespace {

// state layout: e(0..2) n(3..5) z(6..8) s(9..11)
Vec3 get(const OdeTable::State& y, int base) { return {y[base], y[base + 1], y[base + 2]}; }

void put(OdeTable::State& y, int base, Vec3 v) {
  y[base] = v.x;
  y[base + 1] = v.y;
  y[base + 2] = v.z;
}

void orthonormalize(OdeTable::State& y) {
  Vec3 e = normalized(get(y, 0));
  Vec3 n = get(y, 3);
  n = normalized(n - dot(n, e) * e);
  const Vec3 z = cross(e, n);
  put(y, 0, e);
  put(y, 3, n);
  put(y, 6, z);
}

void check_initial_frame(const RuledSurface::InitialData& init) {
  const double tol = 1e-9;
  if (std::abs(norm(init.e0) - 1.0) > tol || std::abs(norm(init.n0) - 1.0) > tol ||
      std::abs(norm(init.z0) - 1.0) > tol || std::abs(dot(init.e0, init.n0)) > tol ||
      std::abs(dot(init.n0, init.z0)) > tol || std::abs(dot(init.z0, init.e0)) > tol)
    throw DomainError("initial frame is not orthonormal");
  if (triple(init.e0, init.n0, init.z0) < 0.0)
    throw DomainError("initial frame is not right-handed");
}

}  // namespace

RuledSurface::RuledSurface(SmoothFn1 delta, SmoothFn1 kappa, SmoothFn1 lambda,
                           Interval u_domain, double frame_step)
    : RuledSurface(std::move(delta), std::move(kappa), std::move(lambda), u_domain,
                   InitialData{u_domain.lo}, frame_step) {}

RuledSurface::RuledSurface(SmoothFn1 delta, SmoothFn1 kappa, SmoothFn1 lambda,
                           Interval u_domain, InitialData init, double frame_step)
    : delta_(std::move(delta)),
      kappa_(std::move(kappa)),
      lambda_(std::move(lambda)),
      domain_(u_domain),
      init_(init) {
  if (!(domain_.hi > domain_.lo)) throw DomainError("empty u-domain");
  check_initial_frame(init_);

  // Skewness: delta must not vanish anywhere on the domain.
  const int probes = 257;
  double prev = 0.0;
  for (int i = 0; i < probes; ++i) {
    const double u = domain_.lo + domain_.length() * i / (probes - 1);
    const double val = delta_(u).c0;
    if (std::abs(val) < 1e-12 || (i > 0 && prev * val < 0.0))
      throw DomainError("delta vanishes on the u-domain (surface not skew)");
    prev = val;
  }

  OdeTable::State y0(12);
  put(y0, 0, init_.e0);
  put(y0, 3, init_.n0);
  put(y0, 6, init_.z0);
  put(y0, 9, init_.s0);

  const SmoothFn1 dl = delta_, ka = kappa_, la = lambda_;
  auto rhs = [dl, ka, la](double u, const OdeTable::State& y, OdeTable::State& dy) {
    const double k = ka(u).c0;
    const double d = dl(u).c0;
    const double l = la(u).c0;
    const Vec3 e = get(y, 0), n = get(y, 3), z = get(y, 6);
    put(dy, 0, n);
    put(dy, 3, -1.0 * e + k * z);
    put(dy, 6, -k * n);
    put(dy, 9, d * l * e + d * z);
  };
  frame_ode_ = std::make_shared<OdeTable>(rhs, std::move(y0), init_.u0, domain_,
                                          frame_step, orthonormalize);
}

FrameState RuledSurface::frame_at(double u) const {
  const OdeTable::State y = frame_ode_->state_at(u);
  return FrameState{u, get(y, 0), get(y, 3), get(y, 6), get(y, 9)};
}

Vec3 RuledSurface::position(double u, double v) const {
  const FrameState f = frame_at(u);
  return f.s + v * f.e;
}

double RuledSurface::w(double u, double v) const {
  const double d = delta_(u).c0;
  return std::sqrt(d * d + v * v);
}

FundamentalForms RuledSurface::fundamental_forms(double u, double v) const {
  const Jet3 d = delta_(u);
  const double k = kappa_(u).c0;
  const double l = lambda_(u).c0;
  const double w2 = d.c0 * d.c0 + v * v;
  const double wv = std::sqrt(w2);
  FundamentalForms ff;
  ff.w = wv;
  ff.g11 = w2 + d.c0 * d.c0 * l * l;
  ff.g12 = d.c0 * l;
  ff.g22 = 1.0;
  ff.h11 = -(k * w2 + d.c1 * v - d.c0 * d.c0 * l) / wv;
  ff.h12 = d.c0 / wv;
  ff.h22 = 0.0;
  return ff;
}

Vec3 RuledSurface::unit_normal(double u, double v) const {
  const FrameState f = frame_at(u);
  const double d = delta_(u).c0;
  const double wv = std::sqrt(d * d + v * v);
  return (d * f.n - v * f.z) / wv;
}

EuclideanCurvatures RuledSurface::euclidean_curvatures(double u, double v) const {
  const Jet3 d = delta_(u);
  const double k = kappa_(u).c0;
  const double l = lambda_(u).c0;
  const double w2 = d.c0 * d.c0 + v * v;
  const double wv = std::sqrt(w2);
  return {-d.c0 * d.c0 / (w2 * w2),
          -(k * w2 + d.c1 * v + d.c0 * d.c0 * l) / (2.0 * w2 * wv)};
}

}  // namespace ruledrel
