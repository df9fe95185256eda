#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ruledrel/grid.hpp"
#include "ruledrel/relnorm.hpp"
#include "ruledrel/spheres.hpp"
#include "ruledrel/support.hpp"
#include "ruledrel/surface.hpp"

namespace ruledrel {

// Specialized invariants of a central normalization q = g v / w:
//   H = g'/delta, K = H^2 (every point is a relative umbilic),
//   S = -g [kappa v^2 + delta^2 (kappa - lambda)] / (2 delta^2 v),
//   J = 3 [kappa g v^2 + 2 delta g' v + delta^2 g (kappa - lambda)] / (2 delta^2 v).
struct CentralInvariants {
  double H = 0, K = 0, S = 0, J = 0;
  double umbilic_defect = 0;  // H^2 - K
};

CentralInvariants central_invariants(const RuledSurface& surf, const SmoothFn1& g, double u,
                                     double v);

// d = kappa e + z: the rotation vector of the moving frame.
Vec3 darboux_vector(const RuledSurface& surf, double u);

// Point of the focal curve x* = s - (delta g / g') d. All relative normals
// along a generator pass through it.
Vec3 focal_curve_point(const RuledSurface& surf, const SmoothFn1& g, double u);

// The developable surface x*(u, t) = s(u) + t d(u) swept by the Darboux
// directions, with striction curve s - (delta lambda / kappa') d.
struct DarbouxRuledSurface {
  std::function<Vec3(double, double)> position;
  std::function<Vec3(double)> striction;  // throws StationaryKappa where kappa' = 0
};

DarbouxRuledSurface darboux_ruled_surface(const RuledSurface& surf);

// max |Gaussian curvature| of the Darboux-direction surface over the grid,
// measured by finite differences of its parametrization.
double darboux_developability_residual(const RuledSurface& surf, const GridSpec& grid = {});

// One geometric characterization of the Tchebychev field, tested numerically:
// the lhs residual measures the field property on the grid, the rhs residual
// measures the structural condition on (surface, g) it is equivalent to.
struct PredicateResult {
  std::string name;
  double lhs_residual = 0;
  bool lhs_holds = false;
  double rhs_residual = 0;
  bool rhs_holds = false;
};

struct CentralPredicateReport {
  std::vector<PredicateResult> items;
  // <T|_{v=0}, s'> = g delta (kappa lambda + 1); zero on Edlinger surfaces
  double striction_inner_product = 0;

  const PredicateResult* find(const std::string& name) const;
};

CentralPredicateReport tchebychev_predicates(const RuledSurface& surf, const SmoothFn1& g,
                                             const GridSpec& grid = {}, double tol = 1e-8);

// The central image Psi1: ruled surface traced by the central relative
// normals moved to the origin. Invariants: kappa1 = kappa, delta1 = -g',
// lambda1 = (kappa g)'/g'; striction s1 = -g d; ruling parameter v1 = -g'v/delta.
struct CentralImage {
  std::shared_ptr<RuledSurface> surface1;
  SmoothFn1 delta1, kappa1, lambda1;
  std::function<Vec3(double)> striction1;          // in the ambient frame of the base surface
  std::function<double(double, double)> v1;        // ruling parameter map
  std::function<double(double, double)> w1;        // = |H| w
  std::function<Vec3(double, double)> embedding;   // y1(u,v) = s1 + v1 e
};

CentralImage central_image(const RuledSurface& surf, const SmoothFn1& g);

// Numeric evaluation of the sphere characterizations special to central
// normalizations, cross-checked against the generic detectors.
struct CentralSphereReport {
  bool improper = false;
  double improper_residual = 0;  // constancy of g and kappa
  bool proper = false;
  double proper_residual = 0;    // constancy of c, c1 + the compatibility condition
  double c = 0, c1 = 0;
  bool detector_improper = false;  // generic detector on q = g v / w
  bool detector_proper = false;
};

CentralSphereReport central_sphere_tests(const RuledSurface& surf, const SmoothFn1& g,
                                         const GridSpec& grid = {});

// Existence of a ruled surface whose central image is the given surface:
// requires a constant c1 with delta (kappa - lambda) - kappa' (c1 - int delta) = 0.
struct InverseProblem {
  double c1 = 0;
  double residual = 0;
  std::shared_ptr<RuledSurface> psi_star;  // generators parallel to the original
  SmoothFn1 g_star;                        // central ingredient, g* = c1 - int delta
};

std::optional<InverseProblem> inverse_problem(const RuledSurface& surf, double tol = 1e-7);

}  // namespace ruledrel
