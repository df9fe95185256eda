#pragma once

#include "ruledrel/support.hpp"
#include "ruledrel/surface.hpp"
#include "ruledrel/vec3.hpp"

namespace ruledrel {

// Coefficients of a vector in the moving frame {e, n, z}.
struct FrameVector {
  double e = 0, n = 0, z = 0;

  Vec3 world(const FrameState& f) const { return e * f.e + n * f.n + z * f.z; }
};

// Relative normal y = y1 e + y2 n + y3 z.
struct RelativeNormal {
  double y1 = 0, y2 = 0, y3 = 0;

  FrameVector frame() const { return {y1, y2, y3}; }
};

struct RelMetric {
  double G11 = 0, G12 = 0, G22 = 0;
  double Ginv11 = 0, Ginv12 = 0, Ginv22 = 0;
  double detG = 0;
};

// The nonvanishing Darboux tensor data: A112, A122 and their fully raised
// counterparts. A^111 and A_222 vanish identically on a skew ruled surface.
struct DarbouxComponents {
  double A112 = 0, A112_up = 0;
  double A122 = 0, A122_up = 0;
};

// b[i][j] = B_i^j with y_/i = -B_i^j x_/j.
struct ShapeOperator {
  double b[2][2] = {{0, 0}, {0, 0}};

  double det() const { return b[0][0] * b[1][1] - b[0][1] * b[1][0]; }
  double trace() const { return b[0][0] + b[1][1]; }
};

struct RelCurvatures {
  double K = 0;  // relative curvature
  double H = 0;  // relative mean curvature
};

struct TchebychevField {
  double T1 = 0, T2 = 0;  // contravariant components
  FrameVector frame;      // the same field expanded in {e, n, z}
};

struct RelInvariants {
  double J = 0, K = 0, H = 0, S = 0;
  double T1 = 0, T2 = 0;
  FrameVector T_frame;
  double divT = 0;
  ShapeOperator B;
};

RelativeNormal relative_normal(const RuledSurface& surf, const SupportField& q, double u, double v);
Vec3 relative_normal_world(const RuledSurface& surf, const SupportField& q, double u, double v);

RelMetric relative_metric(const RuledSurface& surf, const SupportField& q, double u, double v);

DarbouxComponents darboux_components(const RuledSurface& surf, const SupportField& q,
                                     double u, double v);

// Pick invariant: direct closed form.
double pick_invariant(const RuledSurface& surf, const SupportField& q, double u, double v);
// Pick invariant assembled from the Darboux components (independent route).
double pick_invariant_assembled(const RuledSurface& surf, const SupportField& q,
                                double u, double v);

ShapeOperator shape_operator(const RuledSurface& surf, const SupportField& q, double u, double v);

// Closed forms for (K, H); equal det/half-trace of the shape operator.
RelCurvatures rel_curvatures(const RuledSurface& surf, const SupportField& q, double u, double v);

// Scalar curvature of the relative metric.
double scalar_curvature(const RuledSurface& surf, const SupportField& q, double u, double v);

TchebychevField tchebychev(const RuledSurface& surf, const SupportField& q, double u, double v);

// div T with respect to the relative metric; T^i derivatives by central
// differences (step h), falling back to one-sided stencils at domain ends.
double divergence_T(const RuledSurface& surf, const SupportField& q, double u, double v,
                    double h = 1e-5);

RelInvariants rel_invariants(const RuledSurface& surf, const SupportField& q, double u, double v);

}  // namespace ruledrel
