#pragma once

#include <functional>
#include <vector>

#include "ruledrel/smooth_fn.hpp"

namespace ruledrel {

// Classical fixed-step RK4 over [domain.lo, domain.hi] anchored at u0, with
// every step cached. Evaluation integrates a single partial step from the
// nearest cached knot, so results are deterministic for a fixed step size.
class OdeTable {
 public:
  using State = std::vector<double>;
  using Rhs = std::function<void(double u, const State& y, State& dydu)>;
  using PostStep = std::function<void(State& y)>;

  OdeTable() = default;
  // `pad` extends the march past both domain ends (useful when finite
  // differences of the solution are taken near the boundary); the padding is
  // abandoned quietly where the right-hand side stops being evaluable.
  OdeTable(Rhs rhs, State y0, double u0, Interval domain, double step = 1e-3,
           PostStep post_step = nullptr, double pad = 0.0);

  State state_at(double u) const;
  double u0() const { return u0_; }
  const Interval& domain() const { return domain_; }

 private:
  struct Knot {
    double u;
    State y;
  };

  State step_from(const Knot& from, double target) const;
  void rk4_step(double u, double h, State& y) const;

  Rhs rhs_;
  PostStep post_step_;
  double u0_ = 0.0;
  double step_ = 1e-3;
  Interval domain_;        // nominal
  Interval march_domain_;  // nominal plus whatever padding survived
  std::vector<Knot> knots_;  // sorted by u; knots_[anchor_] is u0
  std::size_t anchor_ = 0;
};

// Cumulative integral of f from u0 (value 0 at u0), as a SmoothFn1 whose
// derivatives are the integrand's jet shifted down.
SmoothFn1 antiderivative(SmoothFn1 f, double u0, Interval domain, double step = 1e-3);

}  // namespace ruledrel
