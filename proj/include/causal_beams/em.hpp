#pragma once

#include <Eigen/Core>

#include "causal_beams/scalar_beams.hpp"
#include "causal_beams/spectral.hpp"

namespace cb {

using CMat3 = Eigen::Matrix3cd;

// S v = i n x v with n = k / omega.
CMat3 spin_matrix(const Vec3& k3, double omega);
// (S^2 + S) / 2.
CMat3 helicity_projector(const Vec3& k3, double omega);

// Value and real-spacetime derivatives (up to second order) of a holomorphic
// scalar potential phi(x - i y, t - i u).
struct ScalarJet {
  cplx value{};
  CVec3 grad = CVec3::Zero();
  CMat3 hess = CMat3::Zero();
  cplx lap{};
  cplx dt{};
  CVec3 grad_dt = CVec3::Zero();
  cplx dtt{};
};

// Jet of D~+- through r~ and tau; rejects points on the source disk tube.
ScalarJet propagator_jet(const SpacetimePoint& z, Causality which);
// Jet of G4 = 1 / (4 pi^2 z^2), polynomial in the components of z.
ScalarJet g4_jet(const SpacetimePoint& z);

// L[phi p] = grad(p . grad phi) - p lap phi + i (grad d_t phi) x p.
CVec3 apply_L(const ScalarJet& phi, const CVec3& p);

// Z = D~+-(z) p.
CVec3 dipole_potential(const SpacetimePoint& z, const CVec3& p, Causality which);
// F = i L Z; D = Re F, B = Im F.
CVec3 dipole_field(const SpacetimePoint& z, const CVec3& p, Causality which);

// Columns -L[G4 e_j] / 2.
CMat3 wavelet_dyadic(const SpacetimePoint& z);
// Columns F_{e_j}^{+-} / 2; W = W+ - W-.
CMat3 wavelet_dyadic_split(const SpacetimePoint& z, Causality which);

// Gram kernel W_{z1}^* W_{z2} = -Theta(-(y1.y2)) W(z1 - z2*), y1.y2 = y1_vec.y2_vec - u1 u2;
// Hermitian positive semidefinite on any finite point set.
CMat3 reproducing_kernel(const SpacetimePoint& z1, const SpacetimePoint& z2);

// Scalar factor of the retarded Hertz potential in Fourier space; omega > 0.
cplx hertz_potential_ft(const WaveVector& k, const SourcePoint& y);
// 2 W^+(k, y) p = i L^ Z^ = -Z^ [i k x (k x p) + omega k x p]; omega > 0.
CVec3 em_wavelet_ft(const WaveVector& k, const SourcePoint& y, const CVec3& p);

}  // namespace cb
