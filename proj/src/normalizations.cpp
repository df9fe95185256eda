#include "ruledrel/normalizations.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "ruledrel/errors.hpp"
#include "ruledrel/ode.hpp"

namespace ruledrel {

namespace {

Jet2 w_jet(const SmoothFn1& delta, double u, double v) {
  const Jet2 d = Jet2::from_u(delta(u));
  const Jet2 vv = Jet2::coord_v(v);
  return sqrt(d * d + vv * vv);
}

void probe_nonvanishing(const SmoothFn1& f, const Interval& dom, const char* what) {
  const int n = 201;
  double prev = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = dom.lo + dom.length() * i / (n - 1);
    const double val = f(u).c0;
    if (std::abs(val) < 1e-12 || (i > 0 && prev * val < 0.0)) {
      std::ostringstream os;
      os << what << " vanishes near u = " << u;
      throw VanishingIngredient(os.str());
    }
    prev = val;
  }
}

}  // namespace

SupportField make_euclidean() {
  return SupportField([](double, double) { return Jet2::constant(1.0); }, "euclidean");
}

SupportField make_central(const RuledSurface& surf, SmoothFn1 g) {
  probe_nonvanishing(g, surf.u_domain(), "central ingredient g");
  const SmoothFn1 delta = surf.delta_fn();
  return SupportField(
      [delta, g](double u, double v) {
        return Jet2::from_u(g(u)) * Jet2::coord_v(v) / w_jet(delta, u, v);
      },
      "central");
}

SupportField make_polar(const RuledSurface& surf, SmoothFn1 f_of_V) {
  const SmoothFn1 delta = surf.delta_fn();
  const SmoothFn1 kappa_int =
      antiderivative(surf.kappa_fn(), surf.u0(), surf.u_domain());
  return SupportField(
      [delta, kappa_int, f_of_V](double u, double v) {
        const Jet2 V = atan(Jet2::coord_v(v) / Jet2::from_u(delta(u))) -
                       Jet2::from_u(kappa_int(u));
        const Jet3 f = f_of_V(V.v);
        if (std::abs(f.c0) < 1e-12)
          throw VanishingIngredient("polar ingredient f vanishes on the working domain");
        return compose(f, V);
      },
      "polar");
}

SupportField make_right(const RuledSurface& surf, SmoothFn1 f, SmoothFn1 g,
                        std::optional<Interval> v_check) {
  const SmoothFn1 delta = surf.delta_fn();
  if (v_check) {
    const int n = 101;
    for (int i = 0; i < n; ++i) {
      const double u = surf.u_domain().lo + surf.u_domain().length() * i / (n - 1);
      double prev = 0.0;
      for (int j = 0; j < n; ++j) {
        const double v = v_check->lo + v_check->length() * j / (n - 1);
        const double val = f(u).c0 + g(u).c0 * v;
        if (std::abs(val) < 1e-12 || (j > 0 && prev * val < 0.0)) {
          std::ostringstream os;
          os << "right ingredient f + g v vanishes near (u, v) = (" << u << ", " << v << ")";
          throw VanishingIngredient(os.str());
        }
        prev = val;
      }
    }
  }
  return SupportField(
      [delta, f, g](double u, double v) {
        return (Jet2::from_u(f(u)) + Jet2::from_u(g(u)) * Jet2::coord_v(v)) /
               w_jet(delta, u, v);
      },
      "right");
}

std::string to_string(NormalizationClass c) {
  switch (c) {
    case NormalizationClass::central: return "central";
    case NormalizationClass::polar: return "polar";
    case NormalizationClass::right: return "right";
    case NormalizationClass::asymptotic: return "asymptotic";
  }
  return "?";
}

std::set<NormalizationClass> classify(const RuledSurface& surf, const SupportField& q,
                                      const GridSpec& grid, double tol) {
  double max_y1 = 0, max_y2 = 0, max_y3 = 0, max_y2v = 0, max_y3v = 0;
  const double h = 1e-5;
  for_each_node(surf.u_domain(), grid, [&](double u, double v) {
    const RelativeNormal y = relative_normal(surf, q, u, v);
    max_y1 = std::max(max_y1, std::abs(y.y1));
    max_y2 = std::max(max_y2, std::abs(y.y2));
    max_y3 = std::max(max_y3, std::abs(y.y3));
    const RelativeNormal yp = relative_normal(surf, q, u, v + h);
    const RelativeNormal ym = relative_normal(surf, q, u, v - h);
    max_y2v = std::max(max_y2v, std::abs((yp.y2 - ym.y2) / (2 * h)));
    max_y3v = std::max(max_y3v, std::abs((yp.y3 - ym.y3) / (2 * h)));
  });
  std::set<NormalizationClass> out;
  if (max_y2 < tol) out.insert(NormalizationClass::central);
  if (max_y1 < tol) out.insert(NormalizationClass::polar);
  if (std::max(max_y2v, max_y3v) < tol) out.insert(NormalizationClass::right);
  if (max_y3 < tol) out.insert(NormalizationClass::asymptotic);
  return out;
}

RightImageType right_image_type(const RuledSurface& surf, const SmoothFn1& f,
                                const SmoothFn1& g, int n_samples, double tol) {
  double max_r = 0, min_abs = 1e300;
  bool sign_change = false;
  double prev = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double u =
        surf.u_domain().lo + surf.u_domain().length() * i / (n_samples - 1);
    const double r = surf.delta(u).c0 * g(u).c1 - surf.kappa(u).c0 * f(u).c0;
    max_r = std::max(max_r, std::abs(r));
    min_abs = std::min(min_abs, std::abs(r));
    if (i > 0 && prev * r < 0) sign_change = true;
    prev = r;
  }
  if (max_r < tol) return RightImageType::curve;
  if (min_abs > tol && !sign_change) return RightImageType::parallel_ruled;
  throw MixedImageType("delta g' - kappa f vanishes somewhere but not everywhere");
}

}  // namespace ruledrel
