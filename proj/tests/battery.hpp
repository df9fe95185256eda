#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ruledrel/normalizations.hpp"
#include "ruledrel/smooth_fn.hpp"
#include "ruledrel/surface.hpp"

namespace ruledrel::testing {

// One surface with the four normalization kinds attached.
struct BatteryCase {
  std::string name;
  std::shared_ptr<RuledSurface> surf;
  std::vector<std::pair<std::string, SupportField>> normalizations;
  SmoothFn1 central_g;  // the g used by the central entry
};

inline const std::vector<BatteryCase>& battery() {
  static const std::vector<BatteryCase> cases = [] {
    std::vector<BatteryCase> out;
    auto add = [&](std::string name, SmoothFn1 d, SmoothFn1 k, SmoothFn1 l, Interval dom) {
      BatteryCase c;
      c.name = std::move(name);
      c.surf = std::make_shared<RuledSurface>(std::move(d), std::move(k), std::move(l), dom);
      c.central_g = make_smooth_fn("2 + 0.3*sin(u)");
      c.normalizations.emplace_back("euclidean", make_euclidean());
      c.normalizations.emplace_back("central", make_central(*c.surf, c.central_g));
      c.normalizations.emplace_back(
          "right", make_right(*c.surf, make_smooth_fn("1 + 0.2*u"), make_smooth_fn("0.8")));
      c.normalizations.emplace_back("polar", make_polar(*c.surf, make_smooth_fn("2 + 0.5*cos(u)")));
      out.push_back(std::move(c));
      return out.size() - 1;
    };
    add("helicoid", SmoothFn1::constant(1.0), SmoothFn1::constant(0.0),
        SmoothFn1::constant(0.0), {0.0, 1.5});
    add("conoidal", make_smooth_fn("1 + 0.2*sin(u)"), SmoothFn1::constant(0.0),
        SmoothFn1::constant(0.4), {0.0, 1.5});
    add("kappa_const", SmoothFn1::constant(1.2), SmoothFn1::constant(1.0),
        SmoothFn1::constant(0.5), {0.0, 1.5});
    add("kappa_linear", SmoothFn1::constant(1.0), make_smooth_fn("u"),
        SmoothFn1::constant(0.7), {0.5, 1.5});
    add("edlinger", SmoothFn1::constant(1.0), SmoothFn1::constant(1.0),
        SmoothFn1::constant(-1.0), {0.0, 1.5});
    return out;
  }();
  return cases;
}

}  // namespace ruledrel::testing
