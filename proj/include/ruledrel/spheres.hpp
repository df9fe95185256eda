#pragma once

#include <functional>
#include <optional>

#include "ruledrel/grid.hpp"
#include "ruledrel/relnorm.hpp"
#include "ruledrel/support.hpp"
#include "ruledrel/surface.hpp"

namespace ruledrel {

enum class SphereKind { improper, proper };

struct SphereCertificate {
  SphereKind kind = SphereKind::improper;
  double c = 0.0;   // homothety constant (proper only)
  Vec3 center;      // proper: the fixed point; improper: the constant image vector
  double residual = 0.0;  // max deviation over the verification grid
};

// Pointwise residuals (by finite differences) of the four closure conditions
// y1_/1 - y2 = kappa y2 + y3_/1 = y1_/2 = y3_/2 = 0 of an improper sphere.
struct ImproperClosure {
  double max_y11_minus_y2 = 0;
  double max_ky2_plus_y31 = 0;
  double max_y12 = 0;
  double max_y32 = 0;
};

std::optional<SphereCertificate> is_improper_sphere(const RuledSurface& surf,
                                                    const SupportField& q,
                                                    const GridSpec& grid = {},
                                                    double tol = 1e-6,
                                                    ImproperClosure* closure = nullptr);

// Least-squares fit of x = c y + a over the grid; certifies when the fit
// residual stays below tol and B = -(1/c) I, H = -1/c, K = 1/c^2 hold.
std::optional<SphereCertificate> is_proper_sphere(const RuledSurface& surf,
                                                  const SupportField& q,
                                                  const GridSpec& grid = {},
                                                  double tol = 1e-6);

// A right support field together with the ingredient functions it was built
// from (handy for the image-type test and the closed-form cross-checks).
struct RightNormalization {
  SupportField q;
  SmoothFn1 f, g;
};

// Pick invariant of a right normalization q = (f + gv)/w in closed form:
// J = 3g { g[kappa v^2 + delta^2(kappa-lambda)] - delta' f + 2 delta (g'v + f') }
//     / (2 delta^2 (gv + f)).
double right_pick_invariant(const RuledSurface& surf, const SmoothFn1& f, const SmoothFn1& g,
                            double u, double v);

// Improper-sphere constructions.
// Conoidal case: f = delta (c1 cos u + c2 sin u), g = c3.
RightNormalization build_improper_conoidal(const RuledSurface& surf, double c1, double c2,
                                           double c3);
// Non-conoidal case: g solves (g'/kappa)'' + g'/kappa + (kappa g)' = 0 from
// the initial jet (g0, g0', g0'') at u0; f = delta g' / kappa.
RightNormalization build_improper_nonconoidal(const RuledSurface& surf, double g0, double g0p,
                                              double g0pp);

// Proper-sphere constructions with homothety constant c.
// Conoidal case: g and f by quadratures anchored at u0.
RightNormalization build_proper_conoidal(const RuledSurface& surf, double c, double c1,
                                         double c2, double c3);
// Non-conoidal case: with P = (delta + c g')/(c kappa) the function g solves
// P'' + P + (kappa g)' + delta lambda / c = 0 and f = delta P.
RightNormalization build_proper_nonconoidal(const RuledSurface& surf, double c, double g0,
                                            double g0p, double g0pp);

// Normalizations constantly linked to the moving frame: y components constant.
// Then the surface is conoidal and relatively minimal with q = (c1 v + c2 delta)/w;
// for c2 != 0 the relative image is a circle of radius 1/|c2|.
struct ConstantlyLinkedReport {
  double c1 = 0, c2 = 0;
  double fit_residual = 0;        // q w against c1 v + c2 delta
  double component_residual = 0;  // max deviation of the y frame components
  double max_kappa = 0;           // conoidal witness
  double max_H = 0;               // relative-minimal witness
  std::optional<double> circle_radius;
};

std::optional<ConstantlyLinkedReport> constantly_linked(const RuledSurface& surf,
                                                        const SupportField& q,
                                                        const GridSpec& grid = {},
                                                        double tol = 1e-6);

}  // namespace ruledrel
