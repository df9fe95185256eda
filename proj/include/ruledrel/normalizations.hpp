#pragma once

#include <optional>
#include <set>
#include <string>

#include "ruledrel/grid.hpp"
#include "ruledrel/relnorm.hpp"
#include "ruledrel/support.hpp"
#include "ruledrel/surface.hpp"

namespace ruledrel {

// The special support-function families. All of them produce exact analytic
// partials by composing the univariate ingredient jets with the known
// v-dependence.

// q = 1 (the Euclidean normalization: y is the unit normal)
SupportField make_euclidean();

// q = g v / w, g nonvanishing. The relative normal lies in the central plane
// {P; e, z}. Undefined at v = 0; work on a half-strip.
SupportField make_central(const RuledSurface& surf, SmoothFn1 g);

// q = f(V) with V = arctan(v/delta) - int kappa du (anchored at u0 with value
// 0; the additive constant is absorbed into f). The relative normal lies in
// the polar plane {P; n, z}.
SupportField make_polar(const RuledSurface& surf, SmoothFn1 f_of_V);

// q = (f + g v)/w. The relative image is a curve or a ruled surface with
// generators parallel to the original ones. When `v_check` is given, f+gv is
// probed for zeros on u_domain x v_check and a witness is reported.
SupportField make_right(const RuledSurface& surf, SmoothFn1 f, SmoothFn1 g,
                        std::optional<Interval> v_check = std::nullopt);

enum class NormalizationClass { central, polar, right, asymptotic };

std::string to_string(NormalizationClass c);

// Grid test of the membership conditions: y2 = 0 (central), y1 = 0 (polar),
// y2_/2 = y3_/2 = 0 (right), y3 = 0 (asymptotic).
std::set<NormalizationClass> classify(const RuledSurface& surf, const SupportField& q,
                                      const GridSpec& grid = {}, double tol = 1e-7);

enum class RightImageType { curve, parallel_ruled };

// For a right normalization (f, g): the relative image is a curve when
// delta g' - kappa f vanishes identically, a ruled surface with parallel
// generators when it vanishes nowhere. Throws MixedImageType otherwise.
RightImageType right_image_type(const RuledSurface& surf, const SmoothFn1& f,
                                const SmoothFn1& g, int n_samples = 201, double tol = 1e-9);

}  // namespace ruledrel
