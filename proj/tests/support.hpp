#pragma once

#include <random>

#include "causal_beams/scalar_beams.hpp"

namespace cbt {

using cb::cplx;
using cb::Vec3;

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  double uni(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
  Vec3 ball(double r) {
    for (;;) {
      Vec3 v(uni(-1, 1), uni(-1, 1), uni(-1, 1));
      if (v.squaredNorm() <= 1) return r * v;
    }
  }
  Vec3 unit() {
    for (;;) {
      Vec3 v = ball(1.0);
      if (v.norm() > 0.1) return v.normalized();
    }
  }
  // Timelike source point, |u| / a in [1.05, 3]; sign of u random unless fixed.
  cb::SourcePoint source(int sign = 0) {
    const double a = uni(0.2, 1.5);
    const double s = sign ? sign : (uni(0, 1) < 0.5 ? -1.0 : 1.0);
    return {a * unit(), s * a * uni(1.05, 3.0)};
  }
  // Point of the causal tube with x at least 0.2 a from the branch circle.
  cb::SpacetimePoint point(int sign = 0) {
    const cb::SourcePoint y = source(sign);
    for (;;) {
      const Vec3 x = ball(3.0);
      const Vec3 e = y.y_hat();
      const double xi = x.dot(e), rho = (x - xi * e).norm();
      if (std::hypot(rho - y.a(), xi) > 0.2 * y.a()) return {x, uni(-3, 3), y};
    }
  }
};

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace cbt
