#pragma once

#include <Eigen/Core>

#include <stdexcept>

#include "causal_beams/numerics.hpp"

namespace cb {

using Vec3 = Eigen::Vector3d;
using CVec3 = Eigen::Vector3cd;

// Imaginary part iy = (i y_spatial, i u) of a complex source point.
struct SourcePoint {
  Vec3 y = Vec3::Zero();
  double u = 0.0;

  double a() const { return y.norm(); }
  bool has_axis() const { return a() > 0.0; }
  bool timelike() const { return std::abs(u) > a(); }
  // Unit vector along y; e_z when a = 0.
  Vec3 y_hat() const;
};

// Right-handed orthonormal frame (e1, e2, e3 = y_hat) used for azimuths.
struct AxisFrame {
  Vec3 e1, e2, e3;
};
AxisFrame axis_frame(const SourcePoint& y);

// r~ = p - i q, plus cylindrical coordinates about y_hat.
struct ComplexDistance {
  double p = 0, q = 0;
  double rho = 0, xi = 0, phi = 0;
  double r = 0;
  double a = 0;

  cplx rt() const { return {p, -q}; }
  double abs_sq() const { return p * p + q * q; }
};

class SingularityError : public std::domain_error {
 public:
  SingularityError(const std::string& what, double rho, double xi)
      : std::domain_error(what), rho_(rho), xi_(xi) {}
  double rho() const { return rho_; }
  double xi() const { return xi_; }

 private:
  double rho_, xi_;
};

// Principal branch, Re r~ >= 0. Exact xi = 0 inside the disk resolves to the xi -> +0 layer.
ComplexDistance complex_distance(const Vec3& x, const SourcePoint& y);

// r~ from explicit cylindrical coordinates; xi = +-0 selects the disk layer.
cplx complex_distance_cyl(double rho, double xi, double a);

Vec3 from_os(double p, double q, double phi, const SourcePoint& y);

struct OsFrame {
  Vec3 grad_p, grad_q;
  double lap_p = 0, lap_q = 0;
};
OsFrame os_frame(const Vec3& x, const SourcePoint& y);

struct FarZone {
  double p, q;
};
FarZone far_zone(const Vec3& x, const SourcePoint& y);

}  // namespace cb
