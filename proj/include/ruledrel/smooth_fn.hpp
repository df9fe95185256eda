#pragma once

#include <functional>
#include <memory>
#include <utility>

#include "ruledrel/expr.hpp"
#include "ruledrel/jet.hpp"

namespace ruledrel {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
  bool contains(double u, double slack = 1e-9) const {
    return u >= lo - slack && u <= hi + slack;
  }
};

// Univariate scalar function delivered as a jet (value + derivatives to order 3).
class SmoothFn1 {
 public:
  using Eval = std::function<Jet3(double)>;

  SmoothFn1() = default;
  explicit SmoothFn1(Eval f) : f_(std::move(f)) {}

  Jet3 operator()(double u) const { return f_(u); }
  double value(double u) const { return f_(u).c0; }
  bool valid() const { return static_cast<bool>(f_); }

  static SmoothFn1 constant(double a) {
    return SmoothFn1([a](double) { return Jet3::constant(a); });
  }
  static SmoothFn1 identity() {
    return SmoothFn1([](double u) { return Jet3::variable(u); });
  }

 private:
  Eval f_;
};

inline SmoothFn1 make_smooth_fn(Expression expr) {
  auto shared = std::make_shared<Expression>(std::move(expr));
  return SmoothFn1([shared](double u) { return eval_jet3(*shared, u); });
}

inline SmoothFn1 make_smooth_fn(const std::string& text) { return make_smooth_fn(parse(text)); }

// f' as a function. The top jet coefficient (the fourth derivative of f) is
// approximated by a central difference of f.c3; evaluating closed forms never
// consumes it, it is carried only so the jet stays a full Jet3.
inline SmoothFn1 derivative_of(SmoothFn1 f, double h = 1e-4) {
  return SmoothFn1([f, h](double u) {
    const Jet3 a = f(u);
    const double c4 = (f(u + h).c3 - f(u - h).c3) / (2.0 * h);
    return Jet3{a.c1, a.c2, a.c3, c4};
  });
}

}  // namespace ruledrel
