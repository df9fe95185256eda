#pragma once

#include <memory>

#include "ruledrel/ode.hpp"
#include "ruledrel/smooth_fn.hpp"
#include "ruledrel/vec3.hpp"

namespace ruledrel {

// Orthonormal moving frame {e, n, z} and striction point s at parameter u.
struct FrameState {
  double u = 0.0;
  Vec3 e, n, z;
  Vec3 s;
};

struct FundamentalForms {
  double g11 = 0, g12 = 0, g22 = 0;
  double h11 = 0, h12 = 0, h22 = 0;
  double w = 0;  // sqrt(delta^2 + v^2)
};

struct EuclideanCurvatures {
  double gauss = 0;  // always negative on a skew ruled surface
  double mean = 0;
};

// Skew ruled surface reconstructed from its fundamental invariants:
// delta (distribution parameter, != 0), kappa (conical curvature) and
// lambda = cot(striction angle). The frame obeys
//   e' = n,  n' = -e + kappa z,  z' = -kappa n,  s' = delta lambda e + delta z,
// integrated with fixed-step RK4 and re-orthonormalized each step. The
// surface is fixed up to a rigid motion; the anchor frame pins the
// representative.
class RuledSurface {
 public:
  struct InitialData {
    double u0;
    Vec3 e0{1, 0, 0}, n0{0, 1, 0}, z0{0, 0, 1};
    Vec3 s0{0, 0, 0};
  };

  RuledSurface(SmoothFn1 delta, SmoothFn1 kappa, SmoothFn1 lambda, Interval u_domain,
               double frame_step = 1e-3);
  RuledSurface(SmoothFn1 delta, SmoothFn1 kappa, SmoothFn1 lambda, Interval u_domain,
               InitialData init, double frame_step = 1e-3);

  Jet3 delta(double u) const { return delta_(u); }
  Jet3 kappa(double u) const { return kappa_(u); }
  Jet3 lambda(double u) const { return lambda_(u); }
  const SmoothFn1& delta_fn() const { return delta_; }
  const SmoothFn1& kappa_fn() const { return kappa_; }
  const SmoothFn1& lambda_fn() const { return lambda_; }

  const Interval& u_domain() const { return domain_; }
  double u0() const { return init_.u0; }

  FrameState frame_at(double u) const;
  Vec3 position(double u, double v) const;
  FundamentalForms fundamental_forms(double u, double v) const;
  Vec3 unit_normal(double u, double v) const;
  EuclideanCurvatures euclidean_curvatures(double u, double v) const;

  double w(double u, double v) const;

 private:
  SmoothFn1 delta_, kappa_, lambda_;
  Interval domain_;
  InitialData init_;
  std::shared_ptr<const OdeTable> frame_ode_;
};

}  // namespace ruledrel
