#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ruledrel/scenario.hpp"

namespace ruledrel {

// The CLI subcommands, exposed as library functions so tests can drive them
// without spawning a process. Each returns the process exit code:
//   0 success, 1 verification failure, 2 config/parse error, 3 domain error.
// Config and domain errors are thrown (ParseError / DomainError) and mapped
// by the caller.

// CSV with one row per grid node (u-major):
// u,v,Ktilde,HI,J,K,H,S,T1,T2,divT,res136,res240
int cmd_eval(const ScenarioRuntime& rt, std::ostream& out);

// Identity suites; one line per check: NAME max_residual PASS|FAIL.
// tol_override, when set, replaces every suite's default tolerance.
int cmd_check(const ScenarioRuntime& rt, std::ostream& out,
              std::optional<double> tol_override = std::nullopt);

// Wavefront OBJ: grid mesh for surface-like targets, polyline for curves.
// Targets: surface | relative_image | central_image | focal_curve | striction.
int cmd_mesh(const ScenarioRuntime& rt, const std::string& target, std::ostream& out);

// Membership labels, sphere detections, constantly-linked report, and the
// central predicate battery where applicable.
int cmd_classify(const ScenarioRuntime& rt, std::ostream& out);

// Run the sphere construction from the [sphere] section (or plain detection
// when none is configured) and certify the result.
int cmd_sphere(const ScenarioRuntime& rt, std::ostream& out);

}  // namespace ruledrel
