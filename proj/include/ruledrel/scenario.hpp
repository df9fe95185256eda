#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "ruledrel/normalizations.hpp"
#include "ruledrel/smooth_fn.hpp"
#include "ruledrel/support.hpp"
#include "ruledrel/surface.hpp"

namespace ruledrel {

// Declarative description of a run: surface invariants as expression strings,
// a normalization, a sampling grid, and optional sphere-construction data.
// The file format is line based:
//
//   [section]
//   key = value        # comment
//
// Sections: surface, normalization, constants, grid, outputs, sphere,
// tolerances. Constants are substituted textually into every expression
// string before parsing.
struct Scenario {
  // [surface]
  std::string delta = "1";
  std::string kappa = "0";
  std::string lambda = "0";
  Interval u_domain{0.0, 1.0};
  std::optional<double> u0;  // default: left endpoint

  // [normalization]  kind = euclidean | central | polar | right
  std::string kind = "euclidean";
  std::string g;  // central: g(u); right: g(u)
  std::string f;  // polar: f(V); right: f(u)

  // [grid]
  int nu = 21;
  int nv = 21;
  Interval v_domain{0.5, 2.0};

  // [outputs]
  std::string mesh_target = "surface";

  // [sphere]  build = improper_conoidal | improper_nonconoidal |
  //                   proper_conoidal | proper_nonconoidal   (empty: detect)
  std::string sphere_build;
  double c = 1.0, c1 = 0.0, c2 = 0.0, c3 = 0.0;
  double g0 = 1.0, g0p = 0.0, g0pp = 0.0;

  // [tolerances]
  std::optional<double> tol_check;
  std::optional<double> tol_classify;

  std::map<std::string, double> constants;
};

Scenario load_scenario(std::istream& in);
Scenario load_scenario_file(const std::string& path);

// Expression strings with [constants] substituted, ready to parse.
std::string substitute_constants(const std::string& text,
                                 const std::map<std::string, double>& constants);

// The scenario turned into live objects.
struct ScenarioRuntime {
  Scenario spec;
  std::shared_ptr<RuledSurface> surf;
  SupportField q;
  SmoothFn1 central_g;          // valid iff kind == central
  SmoothFn1 right_f, right_g;   // valid iff kind == right
};

ScenarioRuntime build_runtime(const Scenario& scenario);

}  // namespace ruledrel
