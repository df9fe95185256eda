#include "ruledrel/ode.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "ruledrel/errors.hpp"

namespace ruledrel {

OdeTable::OdeTable(Rhs rhs, State y0, double u0, Interval domain, double step,
                   PostStep post_step, double pad)
    : rhs_(std::move(rhs)),
      post_step_(std::move(post_step)),
      u0_(u0),
      step_(step),
      domain_(domain),
      march_domain_(domain) {
  if (!(step > 0.0)) throw DomainError("integration step must be positive");
  if (!domain.contains(u0)) throw DomainError("anchor outside integration domain");

  std::vector<Knot> left, right;
  auto march = [&](std::vector<Knot>& out, double sign, double stop, double& reached) {
    Knot k{u0, y0};
    reached = u0;
    while (sign * (stop - k.u) > 1e-15) {
      const double h = std::min(step_, sign * (stop - k.u));
      Knot next{k.u + sign * h, k.y};
      try {
        rk4_step(k.u, sign * h, next.y);
      } catch (const DomainError&) {
        return;  // padding region not evaluable; keep what we have
      }
      if (post_step_) post_step_(next.y);
      out.push_back(next);
      k = next;
      reached = k.u;
    }
  };

  double reached_hi = u0, reached_lo = u0;
  march(right, +1.0, domain.hi + pad, reached_hi);
  march(left, -1.0, domain.lo - pad, reached_lo);
  if (reached_hi < domain.hi - 1e-12 || reached_lo > domain.lo + 1e-12)
    throw DomainError("right-hand side not evaluable over the integration domain");
  march_domain_ = {std::min(reached_lo, domain.lo), std::max(reached_hi, domain.hi)};

  knots_.reserve(left.size() + right.size() + 1);
  for (auto it = left.rbegin(); it != left.rend(); ++it) knots_.push_back(*it);
  anchor_ = knots_.size();
  knots_.push_back(Knot{u0, std::move(y0)});
  for (auto& k : right) knots_.push_back(std::move(k));
}

void OdeTable::rk4_step(double u, double h, State& y) const {
  const std::size_t n = y.size();
  State k1(n), k2(n), k3(n), k4(n), tmp(n);
  rhs_(u, y, k1);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
  rhs_(u + 0.5 * h, tmp, k2);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
  rhs_(u + 0.5 * h, tmp, k3);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
  rhs_(u + h, tmp, k4);
  for (std::size_t i = 0; i < n; ++i)
    y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

OdeTable::State OdeTable::step_from(const Knot& from, double target) const {
  State y = from.y;
  const double h = target - from.u;
  if (h != 0.0) {
    rk4_step(from.u, h, y);
    if (post_step_) post_step_(y);
  }
  return y;
}

OdeTable::State OdeTable::state_at(double u) const {
  if (!march_domain_.contains(u)) throw DomainError("integration domain exceeded");
  u = std::clamp(u, march_domain_.lo, march_domain_.hi);
  auto it = std::lower_bound(knots_.begin(), knots_.end(), u,
                             [](const Knot& k, double x) { return k.u < x; });
  // nearest of the two bracketing knots
  if (it == knots_.end()) --it;
  else if (it != knots_.begin()) {
    auto prev = std::prev(it);
    if (u - prev->u <= it->u - u) it = prev;
  }
  return step_from(*it, u);
}

SmoothFn1 antiderivative(SmoothFn1 f, double u0, Interval domain, double step) {
  auto table = std::make_shared<OdeTable>(
      [f](double u, const OdeTable::State&, OdeTable::State& dy) { dy[0] = f(u).c0; },
      OdeTable::State{0.0}, u0, domain, step, nullptr, /*pad=*/20.0 * step);
  return SmoothFn1([table, f](double u) {
    const Jet3 a = f(u);
    return Jet3{table->state_at(u)[0], a.c0, a.c1, a.c2};
  });
}

}  // namespace ruledrel
