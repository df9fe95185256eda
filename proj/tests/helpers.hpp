#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "ruledrel/vec3.hpp"

namespace ruledrel::testing {

// central differences
inline double fd1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double fd2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline double fd3(const std::function<double(double)>& f, double x, double h) {
  return (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) /
         (2.0 * h * h * h);
}

inline Vec3 fd1_vec(const std::function<Vec3(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline Vec3 fd2_vec(const std::function<Vec3(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline double rel_err(double got, double want, double floor_scale = 1.0) {
  return std::abs(got - want) / std::max(std::abs(want), floor_scale);
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20260809u);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng());
}

inline int uniform_int(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng());
}

}  // namespace ruledrel::testing
