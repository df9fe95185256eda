#pragma once

#include <cmath>

#include "ruledrel/errors.hpp"
#include "ruledrel/jet.hpp"

namespace ruledrel {

// Bivariate jet: value and partial derivatives through total order 2 at a
// point (u, v). This is what a support field q(u,v) has to deliver.
struct Jet2 {
  double v = 0.0;    // value
  double du = 0.0;   // d/du
  double dv = 0.0;   // d/dv
  double duu = 0.0;  // d2/du2
  double duv = 0.0;  // d2/dudv
  double dvv = 0.0;  // d2/dv2

  static constexpr Jet2 constant(double a) { return {a, 0, 0, 0, 0, 0}; }
  static constexpr Jet2 coord_v(double v0) { return {v0, 0, 1, 0, 0, 0}; }

  // lift a u-jet: derivatives in v vanish
  static constexpr Jet2 from_u(Jet3 a) { return {a.c0, a.c1, 0, a.c2, 0, 0}; }

  friend constexpr Jet2 operator+(Jet2 a, Jet2 b) {
    return {a.v + b.v, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
  }
  friend constexpr Jet2 operator-(Jet2 a, Jet2 b) {
    return {a.v - b.v, a.du - b.du, a.dv - b.dv, a.duu - b.duu, a.duv - b.duv, a.dvv - b.dvv};
  }
  friend constexpr Jet2 operator-(Jet2 a) { return {-a.v, -a.du, -a.dv, -a.duu, -a.duv, -a.dvv}; }

  friend constexpr Jet2 operator*(Jet2 a, Jet2 b) {
    return {a.v * b.v,
            a.du * b.v + a.v * b.du,
            a.dv * b.v + a.v * b.dv,
            a.duu * b.v + 2.0 * a.du * b.du + a.v * b.duu,
            a.duv * b.v + a.du * b.dv + a.dv * b.du + a.v * b.duv,
            a.dvv * b.v + 2.0 * a.dv * b.dv + a.v * b.dvv};
  }

  friend Jet2 operator/(Jet2 a, Jet2 b) {
    if (b.v == 0.0) throw DomainError("division by zero");
    Jet2 r;
    r.v = a.v / b.v;
    r.du = (a.du - r.v * b.du) / b.v;
    r.dv = (a.dv - r.v * b.dv) / b.v;
    r.duu = (a.duu - 2.0 * r.du * b.du - r.v * b.duu) / b.v;
    r.duv = (a.duv - r.du * b.dv - r.dv * b.du - r.v * b.duv) / b.v;
    r.dvv = (a.dvv - 2.0 * r.dv * b.dv - r.v * b.dvv) / b.v;
    return r;
  }

  friend constexpr Jet2 operator*(double s, Jet2 a) {
    return {s * a.v, s * a.du, s * a.dv, s * a.duu, s * a.duv, s * a.dvv};
  }
  friend constexpr Jet2 operator*(Jet2 a, double s) { return s * a; }
  friend constexpr Jet2 operator+(Jet2 a, double s) { a.v += s; return a; }
  friend constexpr Jet2 operator+(double s, Jet2 a) { return a + s; }
  friend constexpr Jet2 operator-(Jet2 a, double s) { a.v -= s; return a; }
  friend constexpr Jet2 operator-(double s, Jet2 a) { return (-a) + s; }
};

// chain rule for an outer univariate function with derivatives f1, f2 at g.v
constexpr Jet2 compose(double f0, double f1, double f2, Jet2 g) {
  return {f0,
          f1 * g.du,
          f1 * g.dv,
          f2 * g.du * g.du + f1 * g.duu,
          f2 * g.du * g.dv + f1 * g.duv,
          f2 * g.dv * g.dv + f1 * g.dvv};
}

inline Jet2 sqrt(Jet2 a) {
  if (a.v <= 0.0) throw DomainError("sqrt of non-positive value");
  const double r = std::sqrt(a.v);
  return compose(r, 0.5 / r, -0.25 / (r * a.v), a);
}

inline Jet2 atan(Jet2 a) {
  const double d = 1.0 / (1.0 + a.v * a.v);
  return compose(std::atan(a.v), d, -2.0 * a.v * d * d, a);
}

// outer univariate function supplied as a jet at g.v (its own derivatives)
constexpr Jet2 compose(Jet3 f, Jet2 g) { return compose(f.c0, f.c1, f.c2, g); }

}  // namespace ruledrel
