#pragma once

#include <cmath>
#include <ostream>

#include "ruledrel/errors.hpp"

namespace ruledrel {

// Value and first three derivatives of a univariate function at a point.
// Arithmetic propagates derivatives by the truncated Leibniz / Faa di Bruno
// rules, so c1..c3 stay exact (up to rounding) under composition.
struct Jet3 {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  static constexpr Jet3 constant(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Jet3 variable(double u) { return {u, 1.0, 0.0, 0.0}; }

  friend constexpr Jet3 operator+(Jet3 a, Jet3 b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2, a.c3 + b.c3};
  }
  friend constexpr Jet3 operator-(Jet3 a, Jet3 b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2, a.c3 - b.c3};
  }
  friend constexpr Jet3 operator-(Jet3 a) { return {-a.c0, -a.c1, -a.c2, -a.c3}; }

  // (fg)''' = f'''g + 3f''g' + 3f'g'' + fg'''
  friend constexpr Jet3 operator*(Jet3 a, Jet3 b) {
    return {a.c0 * b.c0,
            a.c1 * b.c0 + a.c0 * b.c1,
            a.c2 * b.c0 + 2.0 * a.c1 * b.c1 + a.c0 * b.c2,
            a.c3 * b.c0 + 3.0 * a.c2 * b.c1 + 3.0 * a.c1 * b.c2 + a.c0 * b.c3};
  }

  // solve a = r*b order by order
  friend Jet3 operator/(Jet3 a, Jet3 b) {
    if (b.c0 == 0.0) throw DomainError("division by zero");
    Jet3 r;
    r.c0 = a.c0 / b.c0;
    r.c1 = (a.c1 - r.c0 * b.c1) / b.c0;
    r.c2 = (a.c2 - 2.0 * r.c1 * b.c1 - r.c0 * b.c2) / b.c0;
    r.c3 = (a.c3 - 3.0 * r.c2 * b.c1 - 3.0 * r.c1 * b.c2 - r.c0 * b.c3) / b.c0;
    return r;
  }

  friend constexpr Jet3 operator+(Jet3 a, double s) { return {a.c0 + s, a.c1, a.c2, a.c3}; }
  friend constexpr Jet3 operator+(double s, Jet3 a) { return a + s; }
  friend constexpr Jet3 operator-(Jet3 a, double s) { return {a.c0 - s, a.c1, a.c2, a.c3}; }
  friend constexpr Jet3 operator-(double s, Jet3 a) { return {s - a.c0, -a.c1, -a.c2, -a.c3}; }
  friend constexpr Jet3 operator*(double s, Jet3 a) { return {s * a.c0, s * a.c1, s * a.c2, s * a.c3}; }
  friend constexpr Jet3 operator*(Jet3 a, double s) { return s * a; }
  friend constexpr Jet3 operator/(Jet3 a, double s) { return {a.c0 / s, a.c1 / s, a.c2 / s, a.c3 / s}; }
  friend Jet3 operator/(double s, Jet3 a) { return constant(s) / a; }

  friend std::ostream& operator<<(std::ostream& os, Jet3 a) {
    return os << "[" << a.c0 << ", " << a.c1 << ", " << a.c2 << ", " << a.c3 << "]";
  }
};

// chain rule through order 3: f given by its derivatives at g.c0
constexpr Jet3 compose(double f0, double f1, double f2, double f3, Jet3 g) {
  return {f0,
          f1 * g.c1,
          f2 * g.c1 * g.c1 + f1 * g.c2,
          f3 * g.c1 * g.c1 * g.c1 + 3.0 * f2 * g.c1 * g.c2 + f1 * g.c3};
}

inline Jet3 sin(Jet3 a) {
  const double s = std::sin(a.c0), c = std::cos(a.c0);
  return compose(s, c, -s, -c, a);
}

inline Jet3 cos(Jet3 a) {
  const double s = std::sin(a.c0), c = std::cos(a.c0);
  return compose(c, -s, -c, s, a);
}

inline Jet3 tan(Jet3 a) {
  const double t = std::tan(a.c0);
  const double d = 1.0 + t * t;
  return compose(t, d, 2.0 * t * d, 2.0 * d * (1.0 + 3.0 * t * t), a);
}

inline Jet3 exp(Jet3 a) {
  const double e = std::exp(a.c0);
  return compose(e, e, e, e, a);
}

inline Jet3 log(Jet3 a) {
  if (a.c0 <= 0.0) throw DomainError("log of non-positive value");
  const double inv = 1.0 / a.c0;
  return compose(std::log(a.c0), inv, -inv * inv, 2.0 * inv * inv * inv, a);
}

inline Jet3 sqrt(Jet3 a) {
  if (a.c0 < 0.0) throw DomainError("sqrt of negative value");
  if (a.c0 == 0.0) throw DomainError("sqrt derivative singular at zero");
  const double r = std::sqrt(a.c0);
  const double inv = 1.0 / a.c0;
  return compose(r, 0.5 * r * inv, -0.25 * r * inv * inv, 0.375 * r * inv * inv * inv, a);
}

inline Jet3 atan(Jet3 a) {
  const double d = 1.0 / (1.0 + a.c0 * a.c0);
  const double f1 = d;
  const double f2 = -2.0 * a.c0 * d * d;
  const double f3 = (6.0 * a.c0 * a.c0 - 2.0) * d * d * d;
  return compose(std::atan(a.c0), f1, f2, f3, a);
}

// integer exponent: repeated multiplication, valid for any base
inline Jet3 pow(Jet3 a, long n) {
  if (n == 0) return Jet3::constant(1.0);
  const bool neg = n < 0;
  unsigned long m = neg ? static_cast<unsigned long>(-(n + 1)) + 1ul : static_cast<unsigned long>(n);
  Jet3 acc = Jet3::constant(1.0);
  Jet3 base = a;
  while (m != 0) {
    if (m & 1ul) acc = acc * base;
    base = base * base;
    m >>= 1;
  }
  return neg ? Jet3::constant(1.0) / acc : acc;
}

// general exponent: a^b = exp(b log a), domain a > 0
inline Jet3 pow(Jet3 a, Jet3 b) {
  const bool b_const = (b.c1 == 0.0 && b.c2 == 0.0 && b.c3 == 0.0);
  if (b_const) {
    const double bi = std::nearbyint(b.c0);
    if (bi == b.c0 && std::abs(bi) <= 64.0) return pow(a, static_cast<long>(bi));
  }
  return exp(b * log(a));
}

inline double abs_err(Jet3 a, Jet3 b) {
  return std::max(std::max(std::abs(a.c0 - b.c0), std::abs(a.c1 - b.c1)),
                  std::max(std::abs(a.c2 - b.c2), std::abs(a.c3 - b.c3)));
}

}  // namespace ruledrel
