#include "ruledrel/support.hpp"

#include <cmath>
#include <sstream>

#include "ruledrel/errors.hpp"

namespace ruledrel {

Jet2 SupportField::checked_jet(double u, double v) const {
  const Jet2 q = eval_(u, v);
  if (!(std::abs(q.v) > 1e-12)) {
    std::ostringstream os;
    os << "support function vanishes at (u, v) = (" << u << ", " << v << ")";
    throw ZeroSupport(os.str());
  }
  return q;
}

SupportField make_custom_support(CustomSupportSpec spec, Interval u_probe, Interval v_probe,
                                 double tolerance) {
  const int n = 7;
  const double h = 1e-4;
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = u_probe.lo + u_probe.length() * i / (n - 1);
      const double v = v_probe.lo + v_probe.length() * j / (n - 1);
      const double fu = (spec.q(u + h, v) - spec.q(u - h, v)) / (2 * h);
      const double fv = (spec.q(u, v + h) - spec.q(u, v - h)) / (2 * h);
      const double fuu = (spec.q(u + h, v) - 2 * spec.q(u, v) + spec.q(u - h, v)) / (h * h);
      const double fvv = (spec.q(u, v + h) - 2 * spec.q(u, v) + spec.q(u, v - h)) / (h * h);
      const double fuv = (spec.q(u + h, v + h) - spec.q(u + h, v - h) - spec.q(u - h, v + h) +
                          spec.q(u - h, v - h)) / (4 * h * h);
      worst = std::max(worst, std::abs(fu - spec.q_u(u, v)));
      worst = std::max(worst, std::abs(fv - spec.q_v(u, v)));
      worst = std::max(worst, std::abs(fuu - spec.q_uu(u, v)));
      worst = std::max(worst, std::abs(fuv - spec.q_uv(u, v)));
      worst = std::max(worst, std::abs(fvv - spec.q_vv(u, v)));
    }
  }
  if (worst > tolerance) {
    std::ostringstream os;
    os << "custom support field partials disagree with finite differences of q (max "
       << worst << ")";
    throw DomainError(os.str());
  }
  return SupportField(
      [spec](double u, double v) {
        return Jet2{spec.q(u, v),   spec.q_u(u, v),  spec.q_v(u, v),
                    spec.q_uu(u, v), spec.q_uv(u, v), spec.q_vv(u, v)};
      },
      "custom");
}

}  // namespace ruledrel
