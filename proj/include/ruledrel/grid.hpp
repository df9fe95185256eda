#pragma once

#include <functional>

#include "ruledrel/smooth_fn.hpp"

namespace ruledrel {

// Sampling grid for classification, detectors, and identity sweeps. The
// u-range comes from the surface; the v-range is part of the grid because the
// working strip must keep q away from its zeros (central normalizations are
// restricted to a half-strip v > 0 by default).
struct GridSpec {
  int nu = 21;
  int nv = 21;
  Interval v{0.5, 2.0};
};

inline void for_each_node(const Interval& u_dom, const GridSpec& grid,
                          const std::function<void(double, double)>& fn) {
  for (int i = 0; i < grid.nu; ++i) {
    const double u = grid.nu == 1 ? u_dom.lo : u_dom.lo + u_dom.length() * i / (grid.nu - 1);
    for (int j = 0; j < grid.nv; ++j) {
      const double v = grid.nv == 1 ? grid.v.lo : grid.v.lo + grid.v.length() * j / (grid.nv - 1);
      fn(u, v);
    }
  }
}

inline void for_each_u(const Interval& u_dom, int n,
                       const std::function<void(double)>& fn) {
  for (int i = 0; i < n; ++i)
    fn(n == 1 ? u_dom.lo : u_dom.lo + u_dom.length() * i / (n - 1));
}

}  // namespace ruledrel
