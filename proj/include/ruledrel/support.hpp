#pragma once

#include <functional>
#include <string>
#include <utility>

#include "ruledrel/jet2.hpp"
#include "ruledrel/smooth_fn.hpp"

namespace ruledrel {

// Support function q(u,v) of a relative normalization, delivered with all
// partials through total order 2. q must not vanish on the working domain.
class SupportField {
 public:
  using Evaluator = std::function<Jet2(double, double)>;

  SupportField() = default;
  SupportField(Evaluator eval, std::string kind) : eval_(std::move(eval)), kind_(std::move(kind)) {}

  Jet2 jet(double u, double v) const { return eval_(u, v); }

  // evaluation for the relative-geometry formulas; rejects q == 0
  Jet2 checked_jet(double u, double v) const;

  double value(double u, double v) const { return eval_(u, v).v; }
  const std::string& kind() const { return kind_; }
  bool valid() const { return static_cast<bool>(eval_); }

 private:
  Evaluator eval_;
  std::string kind_ = "custom";
};

// Arbitrary support field given by user callables for q and its five partials.
// The partials are cross-validated against finite differences of q on a probe
// grid at construction; inconsistent data is rejected.
struct CustomSupportSpec {
  std::function<double(double, double)> q;
  std::function<double(double, double)> q_u, q_v;
  std::function<double(double, double)> q_uu, q_uv, q_vv;
};

SupportField make_custom_support(CustomSupportSpec spec, Interval u_probe, Interval v_probe,
                                 double tolerance = 1e-4);

}  // namespace ruledrel
