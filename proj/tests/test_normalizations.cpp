#include "ruledrel/normalizations.hpp"

#include <cmath>

#include "battery.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "ruledrel/errors.hpp"
#include "ruledrel/ode.hpp"

using namespace ruledrel;
namespace tst = ruledrel::testing;

namespace {

RuledSurface helicoid(Interval dom = {0.0, 1.5}) {
  return RuledSurface(SmoothFn1::constant(1.0), SmoothFn1::constant(0.0),
                      SmoothFn1::constant(0.0), dom);
}

}  // namespace

TEST_CASE("central family matches its frame expression") {
  // y = -[(g'v + delta kappa g)/delta] e - g z
  for (const auto& c : tst::battery()) {
    const SupportField q = make_central(*c.surf, c.central_g);
    const GridSpec grid;
    double worst = 0;
    for_each_node(c.surf->u_domain(), grid, [&](double u, double v) {
      const RelativeNormal y = relative_normal(*c.surf, q, u, v);
      const Jet3 g = c.central_g(u);
      const double d = c.surf->delta(u).c0, k = c.surf->kappa(u).c0;
      worst = std::max(worst, std::abs(y.y1 + (g.c1 * v + d * k * g.c0) / d));
      worst = std::max(worst, std::abs(y.y2));
      worst = std::max(worst, std::abs(y.y3 + g.c0));
    });
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("central support vanishes on the ruling v = 0") {
  const RuledSurface h = helicoid();
  const SupportField q = make_central(h, SmoothFn1::constant(1.0));
  CHECK(q.value(0.5, 0.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(q.checked_jet(0.5, 0.0), ZeroSupport);
  CHECK_THROWS_AS(make_central(h, make_smooth_fn("u - 0.5")), VanishingIngredient);
}

TEST_CASE("polar family: y1 vanishes and the frame expression holds") {
  // surfaces with closed-form kappa integral keep the oracle exact
  const RuledSurface h = helicoid();
  const RuledSurface s2(SmoothFn1::constant(1.2), SmoothFn1::constant(1.0),
                        SmoothFn1::constant(0.5), Interval{0.0, 1.5});
  const SmoothFn1 f = make_smooth_fn("2 + 0.5*cos(u)");  // as a function of V
  for (const RuledSurface* surf : {&h, &s2}) {
    const SupportField q = make_polar(*surf, f);
    const double k = surf->kappa(0.0).c0;
    double worst = 0, worst1 = 0;
    for_each_node(surf->u_domain(), GridSpec{}, [&](double u, double v) {
      const double d = surf->delta(u).c0;
      const double w = surf->w(u, v);
      const double V = std::atan(v / d) - k * (u - surf->u0());
      const Jet3 fj = f(V);
      const RelativeNormal y = relative_normal(*surf, q, u, v);
      worst1 = std::max(worst1, std::abs(y.y1));
      worst = std::max(worst, std::abs(y.y2 - (d * fj.c0 - v * fj.c1) / w));
      worst = std::max(worst, std::abs(y.y3 + (v * fj.c0 + d * fj.c1) / w));
    });
    CHECK(worst1 < 1e-8);
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("polar family: constant f reproduces the Euclidean normalization") {
  const RuledSurface h = helicoid();
  const SupportField q = make_polar(h, SmoothFn1::constant(1.0));
  for (double u : {0.2, 1.1}) {
    for (double v : {-1.0, 0.0, 1.6}) {
      CHECK(q.value(u, v) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(norm(relative_normal_world(h, q, u, v) - h.unit_normal(u, v)) < 1e-12);
    }
  }
}

TEST_CASE("polar family: f = cos V on the helicoid gives q = 1/sqrt(1+v^2)") {
  const RuledSurface h = helicoid();
  const SupportField q = make_polar(h, make_smooth_fn("cos(u)"));
  for (double v : {-1.5, 0.3, 2.0}) {
    CHECK(q.value(0.7, v) == doctest::Approx(1.0 / std::sqrt(1.0 + v * v)).epsilon(1e-12));
  }
}

TEST_CASE("right family") {
  const RuledSurface h = helicoid();

  // f = 0 reduces to the central normalization
  const SmoothFn1 g = make_smooth_fn("2 + 0.3*sin(u)");
  const SupportField r0 = make_right(h, SmoothFn1::constant(0.0), g);
  const SupportField c0 = make_central(h, g);
  for (double u : {0.4, 1.2}) {
    for (double v : {0.5, 1.8}) {
      CHECK(r0.value(u, v) == doctest::Approx(c0.value(u, v)).epsilon(1e-14));
    }
  }

  // g = 0, f = delta: y2 = f/delta = 1 (the asymptotic family)
  const RuledSurface s(make_smooth_fn("1 + 0.2*sin(u)"), make_smooth_fn("0.3"),
                       make_smooth_fn("0.5"), Interval{0.0, 1.5});
  const SupportField rf = make_right(s, s.delta_fn(), SmoothFn1::constant(0.0));
  for (double u : {0.3, 1.0}) {
    for (double v : {0.6, 1.5}) {
      CHECK(relative_normal(s, rf, u, v).y2 == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(relative_normal(s, rf, u, v).y3) < 1e-13);
    }
  }

  // generators of the image parallel to the generators: y2_/2 = y3_/2 = 0
  for (const auto& c : tst::battery()) {
    const SupportField q = make_right(*c.surf, make_smooth_fn("1 + 0.2*u"),
                                      make_smooth_fn("0.8"));
    const double hstep = 1e-5;
    double worst = 0;
    for_each_node(c.surf->u_domain(), GridSpec{}, [&](double u, double v) {
      const RelativeNormal yp = relative_normal(*c.surf, q, u, v + hstep);
      const RelativeNormal ym = relative_normal(*c.surf, q, u, v - hstep);
      worst = std::max(worst, std::abs((yp.y2 - ym.y2) / (2 * hstep)));
      worst = std::max(worst, std::abs((yp.y3 - ym.y3) / (2 * hstep)));
    });
    CHECK(worst < 1e-8);
  }

  // vanishing q is rejected with a witness
  try {
    make_right(h, SmoothFn1::constant(1.0), SmoothFn1::constant(-1.0), Interval{0.5, 2.0});
    FAIL("expected VanishingIngredient");
  } catch (const VanishingIngredient& err) {
    CHECK(std::string(err.what()).find("(u, v)") != std::string::npos);
  }
}

TEST_CASE("classification") {
  const RuledSurface h = helicoid();
  const GridSpec grid;

  const auto central = classify(h, make_central(h, make_smooth_fn("2 - u")), grid);
  CHECK(central.count(NormalizationClass::central) == 1);
  CHECK(central.count(NormalizationClass::right) == 1);
  CHECK(central.count(NormalizationClass::polar) == 0);
  CHECK(central.count(NormalizationClass::asymptotic) == 0);

  const auto euclid = classify(h, make_euclidean(), grid);
  CHECK(euclid == std::set<NormalizationClass>{NormalizationClass::polar});

  const auto right = classify(
      h, make_right(h, make_smooth_fn("1 + 0.2*u"), make_smooth_fn("0.8")), grid);
  CHECK(right == std::set<NormalizationClass>{NormalizationClass::right});

  // q = f/w: the asymptotic family is right with g = 0
  const auto asym = classify(h, make_right(h, h.delta_fn(), SmoothFn1::constant(0.0)), grid);
  CHECK(asym.count(NormalizationClass::asymptotic) == 1);
  CHECK(asym.count(NormalizationClass::right) == 1);

  // every constructed family is recognized, and the implications hold
  for (const auto& c : tst::battery()) {
    for (const auto& [kind, q] : c.normalizations) {
      const auto labels = classify(*c.surf, q, grid);
      if (kind == "central") CHECK(labels.count(NormalizationClass::central) == 1);
      if (kind == "polar" || kind == "euclidean")
        CHECK(labels.count(NormalizationClass::polar) == 1);
      if (kind == "right" || kind == "central")
        CHECK(labels.count(NormalizationClass::right) == 1);
      if (labels.count(NormalizationClass::central) ||
          labels.count(NormalizationClass::asymptotic))
        CHECK(labels.count(NormalizationClass::right) == 1);
    }
  }
}

TEST_CASE("right image type") {
  const RuledSurface h = helicoid();

  // conoidal with constant g: the image is a curve
  CHECK(right_image_type(h, make_smooth_fn("1 + 0.2*u"), SmoothFn1::constant(0.8)) ==
        RightImageType::curve);

  // helicoid with g = 2 - u, f = 0: delta g' - kappa f = -1
  CHECK(right_image_type(h, SmoothFn1::constant(0.0), make_smooth_fn("2 - u")) ==
        RightImageType::parallel_ruled);

  // kappa = 1 with f = delta g' / kappa: a curve again
  const RuledSurface s2(SmoothFn1::constant(1.2), SmoothFn1::constant(1.0),
                        SmoothFn1::constant(0.5), Interval{0.0, 1.5});
  CHECK(right_image_type(s2, make_smooth_fn("1.2*cos(u)"), make_smooth_fn("sin(u)")) ==
        RightImageType::curve);

  // sign change in delta g' - kappa f
  CHECK_THROWS_AS(right_image_type(h, SmoothFn1::constant(0.0),
                                   make_smooth_fn("0.5*(u - 0.7)^2")),
                  MixedImageType);
}
