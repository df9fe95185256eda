#include "ruledrel/scenario.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ruledrel/errors.hpp"

namespace ruledrel {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_number(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (trim(text.substr(used)).empty()) return v;
  } catch (...) {
  }
  throw ParseError("scenario: key '" + key + "' expects a number, got '" + text + "'");
}

Interval parse_interval(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  double a = 0, b = 0;
  if (is >> a >> b) {
    std::string rest;
    if (!(is >> rest)) {
      if (!(b > a))
        throw ParseError("scenario: interval '" + key + "' must be increasing");
      return Interval{a, b};
    }
  }
  throw ParseError("scenario: key '" + key + "' expects two numbers");
}

bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::string substitute_constants(const std::string& text,
                                 const std::map<std::string, double>& constants) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i])) || text[i] == '_') {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      const std::string word = text.substr(i, j - i);
      auto it = constants.find(word);
      if (it != constants.end()) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "(%.17g)", it->second);
        out += buf;
      } else {
        out += word;
      }
      i = j;
    } else {
      out += text[i++];
    }
  }
  return out;
}

Scenario load_scenario(std::istream& in) {
  Scenario sc;
  std::string line, section;
  int lineno = 0;
  bool saw_u_domain = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ParseError("scenario line " + std::to_string(lineno) + ": unterminated section");
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("scenario line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section == "surface") {
      if (key == "delta") sc.delta = value;
      else if (key == "kappa") sc.kappa = value;
      else if (key == "lambda") sc.lambda = value;
      else if (key == "u_domain") { sc.u_domain = parse_interval(value, key); saw_u_domain = true; }
      else if (key == "u0") sc.u0 = parse_number(value, key);
      else throw ParseError("scenario: unknown surface key '" + key + "'");
    } else if (section == "normalization") {
      if (key == "kind") sc.kind = value;
      else if (key == "g") sc.g = value;
      else if (key == "f") sc.f = value;
      else throw ParseError("scenario: unknown normalization key '" + key + "'");
    } else if (section == "constants") {
      sc.constants[key] = parse_number(value, key);
    } else if (section == "grid") {
      if (key == "nu") sc.nu = static_cast<int>(parse_number(value, key));
      else if (key == "nv") sc.nv = static_cast<int>(parse_number(value, key));
      else if (key == "v_domain") sc.v_domain = parse_interval(value, key);
      else throw ParseError("scenario: unknown grid key '" + key + "'");
    } else if (section == "outputs") {
      if (key == "mesh_target") sc.mesh_target = value;
      else throw ParseError("scenario: unknown outputs key '" + key + "'");
    } else if (section == "sphere") {
      if (key == "build") sc.sphere_build = value;
      else if (key == "c") sc.c = parse_number(value, key);
      else if (key == "c1") sc.c1 = parse_number(value, key);
      else if (key == "c2") sc.c2 = parse_number(value, key);
      else if (key == "c3") sc.c3 = parse_number(value, key);
      else if (key == "g0") sc.g0 = parse_number(value, key);
      else if (key == "g0p") sc.g0p = parse_number(value, key);
      else if (key == "g0pp") sc.g0pp = parse_number(value, key);
      else throw ParseError("scenario: unknown sphere key '" + key + "'");
    } else if (section == "tolerances") {
      if (key == "check") sc.tol_check = parse_number(value, key);
      else if (key == "classify") sc.tol_classify = parse_number(value, key);
      else throw ParseError("scenario: unknown tolerances key '" + key + "'");
    } else if (section.empty()) {
      throw ParseError("scenario line " + std::to_string(lineno) + ": key outside any section");
    } else {
      throw ParseError("scenario: unknown section '" + section + "'");
    }
  }
  if (!saw_u_domain) throw ParseError("scenario: [surface] u_domain is required");
  if (sc.nu < 2 || sc.nv < 2) throw ParseError("scenario: grid nu, nv must be at least 2");
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  return load_scenario(in);
}

ScenarioRuntime build_runtime(const Scenario& scenario) {
  ScenarioRuntime rt;
  rt.spec = scenario;
  auto expr_fn = [&](const std::string& text, const char* what) {
    try {
      return make_smooth_fn(substitute_constants(text, scenario.constants));
    } catch (const ParseError& err) {
      throw ParseError(std::string(what) + ": " + err.what());
    }
  };
  const SmoothFn1 delta = expr_fn(scenario.delta, "delta");
  const SmoothFn1 kappa = expr_fn(scenario.kappa, "kappa");
  const SmoothFn1 lambda = expr_fn(scenario.lambda, "lambda");
  RuledSurface::InitialData init{scenario.u0.value_or(scenario.u_domain.lo)};
  rt.surf = std::make_shared<RuledSurface>(delta, kappa, lambda, scenario.u_domain, init);

  if (scenario.kind == "euclidean") {
    rt.q = make_euclidean();
  } else if (scenario.kind == "central") {
    if (scenario.g.empty()) throw ParseError("central normalization needs g");
    rt.central_g = expr_fn(scenario.g, "g");
    rt.q = make_central(*rt.surf, rt.central_g);
  } else if (scenario.kind == "polar") {
    if (scenario.f.empty()) throw ParseError("polar normalization needs f");
    rt.q = make_polar(*rt.surf, expr_fn(scenario.f, "f"));
  } else if (scenario.kind == "right") {
    if (scenario.f.empty() || scenario.g.empty())
      throw ParseError("right normalization needs f and g");
    rt.right_f = expr_fn(scenario.f, "f");
    rt.right_g = expr_fn(scenario.g, "g");
    rt.q = make_right(*rt.surf, rt.right_f, rt.right_g, scenario.v_domain);
  } else {
    throw ParseError("unknown normalization kind '" + scenario.kind + "'");
  }
  return rt;
}

}  // namespace ruledrel
