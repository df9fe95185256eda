#include "ruledrel/central.hpp"

#include <cmath>

#include "battery.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "ruledrel/errors.hpp"
#include "ruledrel/normalizations.hpp"

using namespace ruledrel;
namespace tst = ruledrel::testing;

namespace {

RuledSurface helicoid(Interval dom = {0.0, 1.5}) {
  return RuledSurface(SmoothFn1::constant(1.0), SmoothFn1::constant(0.0),
                      SmoothFn1::constant(0.0), dom);
}

}  // namespace

TEST_CASE("central invariants: closed forms") {
  const RuledSurface h = helicoid();

  // g = 1: everything vanishes
  for (double v : {0.5, 1.7}) {
    const CentralInvariants ci = central_invariants(h, SmoothFn1::constant(1.0), 0.8, v);
    CHECK(ci.H == 0.0);
    CHECK(ci.K == 0.0);
    CHECK(ci.S == 0.0);
    CHECK(ci.J == 0.0);
  }

  // g = 2 - u: the proper-sphere values
  const SmoothFn1 g = make_smooth_fn("2 - u");
  for (double u : {0.2, 1.0}) {
    for (double v : {0.5, 1.5}) {
      const CentralInvariants ci = central_invariants(h, g, u, v);
      CHECK(ci.H == doctest::Approx(-1.0).epsilon(1e-14));
      CHECK(ci.K == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(ci.S) < 1e-14);
      CHECK(ci.J == doctest::Approx(-3.0).epsilon(1e-14));
      CHECK(ci.umbilic_defect == 0.0);
    }
  }

  // constant g means vanishing relative curvature
  const auto& klin = tst::battery()[3];
  const CentralInvariants ci = central_invariants(*klin.surf, SmoothFn1::constant(2.0), 0.9, 1.1);
  CHECK(ci.K == 0.0);
  CHECK(ci.H == 0.0);

  CHECK_THROWS_AS(central_invariants(h, g, 0.5, 0.0), ZeroV);
  CHECK_THROWS_AS(central_invariants(h, make_smooth_fn("u - 0.5"), 0.5, 1.0),
                  VanishingIngredient);
}

TEST_CASE("central invariants agree with the generic pipeline") {
  for (const auto& c : tst::battery()) {
    const SupportField q = make_central(*c.surf, c.central_g);
    for (int i = 0; i < 20; ++i) {
      const double u = tst::uniform(c.surf->u_domain().lo + 0.01, c.surf->u_domain().hi - 0.01);
      const double v = tst::uniform(0.5, 2.0);
      const CentralInvariants ci = central_invariants(*c.surf, c.central_g, u, v);
      const RelCurvatures kh = rel_curvatures(*c.surf, q, u, v);
      const double J = pick_invariant(*c.surf, q, u, v);
      const double S = scalar_curvature(*c.surf, q, u, v);
      CHECK(std::abs(ci.H - kh.H) < 1e-9 * std::max(1.0, std::abs(ci.H)));
      CHECK(std::abs(ci.K - kh.K) < 1e-9 * std::max(1.0, std::abs(ci.K)));
      CHECK(std::abs(ci.J - J) < 1e-9 * std::max(1.0, std::abs(ci.J)));
      CHECK(std::abs(ci.S - S) < 1e-9 * std::max(1.0, std::abs(ci.S)));
      CHECK(std::abs(ci.umbilic_defect) < 1e-10);
    }
  }
}

TEST_CASE("Darboux vector") {
  const RuledSurface h = helicoid();
  CHECK(norm(darboux_vector(h, 0.9) - Vec3{0, 0, 1}) < 1e-10);

  const RuledSurface s(SmoothFn1::constant(1.0), SmoothFn1::constant(1.0),
                       SmoothFn1::constant(0.0), Interval{0.0, 1.5});
  CHECK(norm(darboux_vector(s, 0.0) - Vec3{1, 0, 1}) < 1e-12);

  // rotation vector property: d x e = e', d x n = n', d x z = z'
  for (const auto& c : tst::battery()) {
    for (int i = 0; i < 10; ++i) {
      const double u = tst::uniform(c.surf->u_domain().lo + 0.01, c.surf->u_domain().hi - 0.01);
      const Vec3 d = darboux_vector(*c.surf, u);
      const double hh = 1e-5;
      const FrameState fp = c.surf->frame_at(u + hh), fm = c.surf->frame_at(u - hh);
      CHECK(norm(cross(d, c.surf->frame_at(u).e) - (fp.e - fm.e) / (2 * hh)) < 1e-9);
      CHECK(norm(cross(d, c.surf->frame_at(u).n) - (fp.n - fm.n) / (2 * hh)) < 1e-9);
      CHECK(norm(cross(d, c.surf->frame_at(u).z) - (fp.z - fm.z) / (2 * hh)) < 1e-9);
    }
  }
}

TEST_CASE("focal curve") {
  const RuledSurface h = helicoid();
  const SmoothFn1 g = make_smooth_fn("2 - u");

  CHECK(norm(focal_curve_point(h, g, 0.0) - Vec3{0, 0, 2}) < 1e-10);

  // independence of v: s + v e + (1/H) y is the same point for all v
  const SupportField q = make_central(h, g);
  for (double u : {0.3, 1.2}) {
    const Vec3 focal = focal_curve_point(h, g, u);
    for (double v : {0.5, 1.1, 1.9}) {
      const double H = central_invariants(h, g, u, v).H;
      const Vec3 p = h.position(u, v) + (1.0 / H) * relative_normal_world(h, q, u, v);
      CHECK(norm(p - focal) < 1e-8);
    }
  }

  CHECK_THROWS_AS(focal_curve_point(h, SmoothFn1::constant(1.0), 0.5), RelativeMinimal);
}

TEST_CASE("Darboux-direction ruled surface") {
  // kappa = u, delta = 1, lambda = 1
  const RuledSurface s(SmoothFn1::constant(1.0), make_smooth_fn("u"),
                       SmoothFn1::constant(1.0), Interval{0.5, 1.5});
  CHECK(darboux_developability_residual(s) < 1e-6);

  // generators parallel to d
  const DarbouxRuledSurface dr = darboux_ruled_surface(s);
  const Vec3 d = darboux_vector(s, 0.9);
  const Vec3 seg = dr.position(0.9, 1.7) - dr.position(0.9, 0.4);
  CHECK(norm(cross(seg, d)) < 1e-12);

  // striction formula z-coefficient sanity: s* - s is parallel to d
  const Vec3 offset = dr.striction(1.1) - s.frame_at(1.1).s;
  CHECK(norm(cross(offset, darboux_vector(s, 1.1))) < 1e-10);

  const RuledSurface h = helicoid();
  CHECK_THROWS_AS(darboux_ruled_surface(h).striction(0.5), StationaryKappa);
}

TEST_CASE("Tchebychev predicates") {
  const RuledSurface h = helicoid();

  // right conoids make T incompressible, for any central g
  {
    const auto rep = tchebychev_predicates(h, make_smooth_fn("2 + 0.3*sin(u)"));
    const auto* item = rep.find("incompressible_iff_right_conoid");
    REQUIRE(item != nullptr);
    CHECK(item->lhs_holds);
    CHECK(item->rhs_holds);
  }

  // relative minimal right conoid: T tangent to the curved asymptotic lines
  {
    const auto rep = tchebychev_predicates(h, SmoothFn1::constant(1.0));
    const auto* item = rep.find("tangent_to_curved_asymptotics");
    REQUIRE(item != nullptr);
    CHECK(item->lhs_holds);
    CHECK(item->rhs_holds);
    // and the relative minimal right helicoid is tangent to the curves of
    // constant Gaussian curvature
    const auto* k_item = rep.find("tangent_to_gauss_curves");
    REQUIRE(k_item != nullptr);
    CHECK(k_item->lhs_holds);
    CHECK(k_item->rhs_holds);
  }

  // Edlinger surface with constant g: T tangent to one family of Euclidean
  // lines of curvature, orthogonal to the striction curve
  {
    const RuledSurface edl(SmoothFn1::constant(1.0), SmoothFn1::constant(1.0),
                           SmoothFn1::constant(-1.0), Interval{0.0, 1.5});
    const auto rep = tchebychev_predicates(edl, SmoothFn1::constant(1.0));
    const auto* item = rep.find("tangent_to_lines_of_curvature");
    REQUIRE(item != nullptr);
    CHECK(item->lhs_holds);
    CHECK(item->rhs_holds);
    const auto* orth = rep.find("orthogonal_to_gauss_curves");
    REQUIRE(orth != nullptr);
    CHECK(orth->lhs_holds);
    CHECK(orth->rhs_holds);
    CHECK(rep.striction_inner_product < 1e-12);
  }

  // conoidal with g = c |delta|^(-1/2): T orthogonal to the generators
  {
    const RuledSurface con(make_smooth_fn("1 + 0.2*sin(u)"), SmoothFn1::constant(0.0),
                           SmoothFn1::constant(0.4), Interval{0.0, 1.5});
    const SmoothFn1 g = make_smooth_fn("2/sqrt(1 + 0.2*sin(u))");
    const auto rep = tchebychev_predicates(con, g);
    const auto* item = rep.find("orthogonal_to_generators");
    REQUIRE(item != nullptr);
    CHECK(item->lhs_holds);
    CHECK(item->rhs_holds);
  }

  // both sides fail together on a generic case
  {
    const auto rep = tchebychev_predicates(h, make_smooth_fn("2 - u"));
    const auto* item = rep.find("orthogonal_to_generators");
    REQUIRE(item != nullptr);
    CHECK(!item->lhs_holds);
    CHECK(!item->rhs_holds);
  }
}

TEST_CASE("central image") {
  const RuledSurface h = helicoid();
  const SmoothFn1 g = make_smooth_fn("2 - u");
  const CentralImage img = central_image(h, g);

  // congruent to the base helicoid: delta1 = 1, kappa1 = 0, lambda1 = 0
  for (double u : {0.2, 0.9, 1.4}) {
    CHECK(img.delta1(u).c0 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(img.kappa1(u).c0) < 1e-12);
    CHECK(std::abs(img.lambda1(u).c0) < 1e-10);
  }

  // w1 = |H| w and the curvature ratio
  const SupportField q = make_central(h, g);
  for (double u : {0.3, 1.1}) {
    for (double v : {0.6, 1.8}) {
      const CentralInvariants ci = central_invariants(h, g, u, v);
      CHECK(img.w1(u, v) == doctest::Approx(std::abs(ci.H) * h.w(u, v)).epsilon(1e-12));
      const double K1_tilde =
          img.surface1->euclidean_curvatures(u, img.v1(u, v)).gauss;
      const double K_tilde = h.euclidean_curvatures(u, v).gauss;
      CHECK(std::abs(K1_tilde - K_tilde / ci.K) < 1e-7);
    }
  }

  CHECK_THROWS_AS(central_image(h, SmoothFn1::constant(1.0)), RelativeMinimal);
}

TEST_CASE("central image: measured invariants match the closed forms") {
  // non-trivial case: kappa = u on [0.5, 1.5], g = 2 + 0.3 sin u
  const RuledSurface s(SmoothFn1::constant(1.0), make_smooth_fn("u"),
                       SmoothFn1::constant(0.7), Interval{0.5, 1.5});
  const SmoothFn1 g = make_smooth_fn("2 + 0.3*sin(u)");
  const CentralImage img = central_image(s, g);

  const double hh = 1e-5;
  for (double u : {0.7, 1.0, 1.3}) {
    // striction tangent s1' by finite differences of the embedding curve
    const Vec3 s1p = (img.striction1(u + hh) - img.striction1(u - hh)) / (2 * hh);
    const FrameState f = s.frame_at(u);
    const double delta1_m = dot(s1p, f.z);        // coefficient of z
    const double dl1_m = dot(s1p, f.e);           // delta1 * lambda1
    CHECK(std::abs(dot(s1p, f.n)) < 1e-6);        // striction condition
    CHECK(std::abs(delta1_m - img.delta1(u).c0) < 1e-6);
    CHECK(std::abs(dl1_m - img.delta1(u).c0 * img.lambda1(u).c0) < 1e-6);
  }

  // embedding parametrizes the image: y1(u,v) equals the relative normal
  const SupportField q = make_central(s, g);
  for (double u : {0.7, 1.2}) {
    for (double v : {0.6, 1.5}) {
      CHECK(norm(img.embedding(u, v) - relative_normal_world(s, q, u, v)) < 1e-9);
    }
  }
}

TEST_CASE("central image special cases") {
  // kappa g = const makes the image orthoid
  const RuledSurface s(SmoothFn1::constant(1.0), make_smooth_fn("u"),
                       SmoothFn1::constant(0.7), Interval{0.5, 1.5});
  const CentralImage orthoid = central_image(s, make_smooth_fn("1/u"));
  for (double u : {0.6, 1.0, 1.4}) CHECK(std::abs(orthoid.lambda1(u).c0) < 1e-9);

  // g = c / sqrt(1 + kappa^2) puts the striction curve of the image on a
  // Euclidean line of curvature: 1 + kappa1 lambda1 = 0
  const CentralImage loc = central_image(s, make_smooth_fn("2/sqrt(1 + u^2)"));
  for (double u : {0.6, 1.0, 1.4})
    CHECK(std::abs(1.0 + loc.kappa1(u).c0 * loc.lambda1(u).c0) < 1e-9);
}

TEST_CASE("central sphere characterizations") {
  const RuledSurface h = helicoid();

  // g = 1: improper (g and kappa constant)
  {
    const CentralSphereReport rep = central_sphere_tests(h, SmoothFn1::constant(1.0));
    CHECK(rep.improper);
    CHECK(rep.detector_improper);
    CHECK(!rep.proper);
  }

  // g = 2 - u: proper with c = 1, c1 = 2
  {
    const CentralSphereReport rep = central_sphere_tests(h, make_smooth_fn("2 - u"));
    CHECK(rep.proper);
    CHECK(rep.detector_proper);
    CHECK(rep.c == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rep.c1 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(!rep.improper);
  }

  // kappa = u with g = 1: neither
  {
    const RuledSurface s(SmoothFn1::constant(1.0), make_smooth_fn("u"),
                         SmoothFn1::constant(0.7), Interval{0.5, 1.5});
    const CentralSphereReport rep = central_sphere_tests(s, SmoothFn1::constant(1.0));
    CHECK(!rep.improper);
    CHECK(!rep.proper);
    CHECK(!rep.detector_improper);
    CHECK(!rep.detector_proper);
  }
}

TEST_CASE("inverse problem") {
  // the right helicoid admits the construction
  {
    const RuledSurface h = helicoid();
    const auto inv = inverse_problem(h);
    REQUIRE(inv.has_value());
    CHECK(inv->residual < 1e-9);
    const CentralImage img = central_image(*inv->psi_star, inv->g_star);
    for (double u : {0.2, 0.8, 1.4}) {
      CHECK(std::abs(img.delta1(u).c0 - h.delta(u).c0) < 1e-6);
      CHECK(std::abs(img.kappa1(u).c0 - h.kappa(u).c0) < 1e-6);
      CHECK(std::abs(img.lambda1(u).c0 - h.lambda(u).c0) < 1e-6);
    }
  }

  // kappa = lambda = u: the pointwise constant drifts, no solution
  {
    const RuledSurface s(SmoothFn1::constant(1.0), make_smooth_fn("u"), make_smooth_fn("u"),
                         Interval{0.5, 1.5});
    CHECK(!inverse_problem(s).has_value());
  }

  // constant kappa != lambda: impossible
  {
    const RuledSurface edl(SmoothFn1::constant(1.0), SmoothFn1::constant(1.0),
                           SmoothFn1::constant(-1.0), Interval{0.0, 1.5});
    CHECK(!inverse_problem(edl).has_value());
  }

  // engineered compatible pair with kappa' != 0:
  // delta = 1, kappa = u, lambda = 2u - 2.5 on [0.5, 1.5] admits c1 = 2
  {
    const RuledSurface s(SmoothFn1::constant(1.0), make_smooth_fn("u"),
                         make_smooth_fn("2*u - 2.5"), Interval{0.5, 1.5});
    const auto inv = inverse_problem(s);
    REQUIRE(inv.has_value());
    CHECK(inv->c1 == doctest::Approx(2.0).epsilon(1e-7));
    const CentralImage img = central_image(*inv->psi_star, inv->g_star);
    for (double u : {0.6, 1.0, 1.4}) {
      CHECK(std::abs(img.delta1(u).c0 - s.delta(u).c0) < 1e-6);
      CHECK(std::abs(img.kappa1(u).c0 - s.kappa(u).c0) < 1e-6);
      CHECK(std::abs(img.lambda1(u).c0 - s.lambda(u).c0) < 1e-6);
    }
  }
}
