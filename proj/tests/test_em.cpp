#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "causal_beams/em.hpp"
#include "causal_beams/verify.hpp"
#include "support.hpp"

using namespace cb;
using cbt::rel;

namespace {

CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2), a(0) * b(1) - a(1) * b(0)};
}

double max_abs(const CMat3& m) { return m.cwiseAbs().maxCoeff(); }

CVec3 random_p(cbt::Rng& r) {
  return {cplx(r.uni(-1, 1), r.uni(-1, 1)), cplx(r.uni(-1, 1), r.uni(-1, 1)), cplx(r.uni(-1, 1), r.uni(-1, 1))};
}

// Exterior point: p > 0.3 and away from the branch circle.
SpacetimePoint exterior(cbt::Rng& r, int sign = 0) {
  const SourcePoint y = r.source(sign);
  for (;;) {
    const Vec3 x = r.ball(2.5);
    const ComplexDistance c = complex_distance(x, y);
    if (c.p > 0.3 && std::hypot(c.rho - c.a, c.xi) > 0.3) return {x, r.uni(-1, 1), y};
  }
}

// Light-cone integral (6 / 16 pi^3) Int_{S^2} P(n) / (n.z - tau)^4 dOmega.
CMat3 fourier_oracle(const SpacetimePoint& z) {
  const GaussRule& gl = gauss_legendre(96);
  const int nphi = 192;
  const CVec3 zv = z.x.cast<cplx>() - I * z.y.y.cast<cplx>();
  const cplx tau = z.tau();
  CMat3 acc = CMat3::Zero();
  for (size_t i = 0; i < gl.x.size(); ++i) {
    const double ct = gl.x[i], st = std::sqrt(1 - ct * ct);
    for (int j = 0; j < nphi; ++j) {
      const double ph = 2 * pi * j / nphi;
      const Vec3 n(st * std::cos(ph), st * std::sin(ph), ct);
      const cplx A = n.cast<cplx>().dot(zv) - tau;
      acc += gl.w[i] * (2 * pi / nphi) * helicity_projector(n, 1.0) / (A * A * A * A);
    }
  }
  return 6.0 / (16 * pi * pi * pi) * acc;
}

}  // namespace

TEST_SUITE("em") {
  TEST_CASE("circular polarization is a fixed vector of S and P") {
    const CVec3 v = CVec3(1, I, 0) / std::sqrt(2.0);
    const Vec3 k(0, 0, 2);
    CHECK((spin_matrix(k, 2.0) * v - v).norm() < 1e-15);
    CHECK((helicity_projector(k, 2.0) * v - v).norm() < 1e-15);
    CHECK((spin_matrix(k, -2.0) * v + v).norm() < 1e-15);
  }

  TEST_CASE("spin and helicity algebra on shell") {
    cbt::Rng r(51);
    for (int n = 0; n < 100; ++n) {
      const Vec3 k = r.ball(3) + Vec3(0, 0, 0.05);
      const double w = (n % 2 ? 1 : -1) * k.norm();
      const CMat3 S = spin_matrix(k, w), P = helicity_projector(k, w);
      CHECK(max_abs(S * S * S - S) < 1e-14);
      CHECK(max_abs(P * P - P) < 1e-14);
      CHECK(max_abs(P - P.adjoint()) < 1e-14);
      CHECK(max_abs(S * P - P) < 1e-14);
      CHECK(std::abs(P.trace() - 1.0) < 1e-14);
      const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<CMat3>(P).eigenvalues();
      CHECK(std::abs(ev(0)) < 1e-14);
      CHECK(std::abs(ev(1)) < 1e-14);
      CHECK(std::abs(ev(2) - 1) < 1e-14);
      const Eigen::Vector3d es = Eigen::SelfAdjointEigenSolver<CMat3>(S).eigenvalues();
      CHECK(std::abs(es(0) + 1) < 1e-14);
      CHECK(std::abs(es(1)) < 1e-14);
      CHECK(std::abs(es(2) - 1) < 1e-14);
    }
    // off shell S^3 = n^2 S
    const Vec3 k(0.3, 1.1, -0.4);
    const CMat3 S = spin_matrix(k, 0.5);
    CHECK(max_abs(S * S * S - (k.squaredNorm() / 0.25) * S) < 1e-13);
  }

  TEST_CASE("dipole potential is the scalar propagator times p") {
    cbt::Rng r(52);
    for (int n = 0; n < 20; ++n) {
      const SpacetimePoint z = exterior(r);
      const CVec3 p = random_p(r);
      for (Causality w : {Causality::retarded, Causality::advanced})
        CHECK((dipole_potential(z, p, w) - extended_propagator(z, w) * p).norm() <=
              1e-15 * std::abs(extended_propagator(z, w)) * p.norm());
    }
  }

  TEST_CASE("scalar jets satisfy the wave equation") {
    cbt::Rng r(53);
    for (int n = 0; n < 50; ++n) {
      const SpacetimePoint z = exterior(r);
      for (Causality w : {Causality::retarded, Causality::advanced}) {
        const ScalarJet j = propagator_jet(z, w);
        CHECK(rel(j.lap, j.dtt) < 1e-10);
        CHECK(rel(j.hess.trace(), j.lap) < 1e-12);
      }
      const ScalarJet g = g4_jet(z);
      CHECK(rel(g.lap, g.dtt) < 1e-10);
      CHECK(rel(g.value, g4(z)) < 1e-14);
    }
  }

  TEST_CASE("dipole fields satisfy Maxwell's equations") {
    cbt::Rng r(54);
    for (int n = 0; n < 25; ++n) {
      const SpacetimePoint z = exterior(r);
      const CVec3 p = random_p(r);
      for (Causality w : {Causality::retarded, Causality::advanced}) {
        const MaxwellResidual m =
            maxwell_residual([&](const Vec3& x, double t) { return dipole_field({x, t, z.y}, p, w); }, z.x, z.t);
        CHECK(m.curl < 1e-5);
        CHECK(m.div < 1e-5);
      }
    }
  }

  TEST_CASE("linearity in p") {
    cbt::Rng r(55);
    for (int n = 0; n < 20; ++n) {
      const SpacetimePoint z = exterior(r);
      const CVec3 p = random_p(r), q = random_p(r);
      const cplx c(0.7, -1.3);
      const CVec3 lhs = dipole_field(z, c * p + q, Causality::retarded);
      const CVec3 rhs = c * dipole_field(z, p, Causality::retarded) + dipole_field(z, q, Causality::retarded);
      CHECK((lhs - rhs).norm() < 1e-13 * rhs.norm());
      const CVec3 wl = wavelet_dyadic(z) * (c * p + q);
      const CVec3 wr = c * (wavelet_dyadic(z) * p) + wavelet_dyadic(z) * q;
      CHECK((wl - wr).norm() < 1e-13 * wr.norm());
    }
  }

  TEST_CASE("wavelet dyadic: split, adjoint symmetry, scaling") {
    cbt::Rng r(56);
    for (int n = 0; n < 50; ++n) {
      const SpacetimePoint z = exterior(r);
      const CMat3 W = wavelet_dyadic(z);
      const double s = max_abs(W);
      const CMat3 split =
          wavelet_dyadic_split(z, Causality::retarded) - wavelet_dyadic_split(z, Causality::advanced);
      CHECK(max_abs(W - split) < 1e-12 * s);
      const SpacetimePoint zc{z.x, z.t, {-z.y.y, -z.y.u}};
      CHECK(max_abs(W.adjoint() - wavelet_dyadic(zc)) < 1e-12 * s);
      const double lam = std::sqrt(z.y.u * z.y.u - z.y.a() * z.y.a());
      CHECK(max_abs(W - wavelet_dyadic(z.scaled(1 / lam)) / std::pow(lam, 4)) < 1e-12 * s);
    }
  }

  TEST_CASE("reproducing kernel") {
    cbt::Rng r(57);
    const SpacetimePoint zp = exterior(r, +1), zm = exterior(r, -1);
    CHECK(max_abs(reproducing_kernel(zp, zm)) == 0.0);
    CHECK(max_abs(reproducing_kernel(zm, zp)) == 0.0);

    // translation covariance in the real parts
    const SpacetimePoint z1 = exterior(r, +1), z2 = exterior(r, +1);
    const Vec3 dx(0.3, -0.7, 1.1);
    const double dt = -0.4;
    const CMat3 K = reproducing_kernel(z1, z2);
    const CMat3 Ks = reproducing_kernel({z1.x + dx, z1.t + dt, z1.y}, {z2.x + dx, z2.t + dt, z2.y});
    CHECK(max_abs(K - Ks) < 1e-12 * max_abs(K));

    // Hermitian: K(z1, z2)^H = K(z2, z1)
    CHECK(max_abs(K.adjoint() - reproducing_kernel(z2, z1)) < 1e-12 * max_abs(K));

    // matches the light-cone Fourier integral at z1 - z2*
    const SpacetimePoint d{z1.x - z2.x, z1.t - z2.t, {z1.y.y + z2.y.y, z1.y.u + z2.y.u}};
    CHECK(max_abs(K - fourier_oracle(d)) < 1e-9 * max_abs(K));
    for (int sign : {+1, -1}) {
      const SpacetimePoint a = exterior(r, sign), b = exterior(r, sign);
      const SpacetimePoint e{a.x - b.x, a.t - b.t, {a.y.y + b.y.y, a.y.u + b.y.u}};
      const CMat3 Kab = reproducing_kernel(a, b);
      if (sign > 0) CHECK(max_abs(Kab - fourier_oracle(e)) < 1e-9 * max_abs(Kab));
      // diagonal block is positive definite
      const Eigen::Vector3d ev = Eigen::SelfAdjointEigenSolver<CMat3>(reproducing_kernel(a, a)).eigenvalues();
      CHECK(ev(0) > 0);
    }
  }

  TEST_CASE("Gram matrix is positive semidefinite") {
    cbt::Rng r(58);
    for (int trial = 0; trial < 10; ++trial) {
      const int sign = trial % 2 ? 1 : -1;
      std::vector<SpacetimePoint> zs;
      for (int i = 0; i < 5; ++i) zs.push_back(exterior(r, sign));
      Eigen::MatrixXcd G(15, 15);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) G.block<3, 3>(3 * i, 3 * j) = reproducing_kernel(zs[i], zs[j]);
      CHECK((G - G.adjoint()).cwiseAbs().maxCoeff() < 1e-12 * G.cwiseAbs().maxCoeff());
      const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(G).eigenvalues();
      CHECK(ev.minCoeff() > -1e-12 * ev.maxCoeff());
    }
  }

  TEST_CASE("Fourier-domain wavelet") {
    cbt::Rng r(59);
    for (int n = 0; n < 20; ++n) {
      const SourcePoint y = r.source(+1);
      const Vec3 k = r.ball(3) + Vec3(0.05, 0, 0);
      const double w = r.uni(0.1, 3);
      const WaveVector kw{k, w};
      const cplx Z = hertz_potential_ft(kw, y);
      CHECK(rel(Z, std::get<cplx>(pulsed_beam_ft(kw, y, Impulse{}))) < 1e-12);
      // p parallel to k: both cross products vanish
      CHECK(em_wavelet_ft(kw, y, k.cast<cplx>()).norm() < 1e-14 * std::abs(Z) * k.squaredNorm());
      // -Z [i k x (k x p) + omega k x p] off shell
      const CVec3 p = random_p(r), kc = k.cast<cplx>();
      const CVec3 bracket = I * cross(kc, cross(kc, p)) + w * cross(kc, p);
      CHECK((em_wavelet_ft(kw, y, p) + Z * bracket).norm() < 1e-13 * std::abs(Z) * bracket.norm());
      // on shell the bracket is -2 i omega^2 P p
      const double ws = k.norm();
      const CVec3 bs = I * cross(kc, cross(kc, p)) + ws * cross(kc, p);
      CHECK((bs + 2.0 * I * ws * ws * (helicity_projector(k, ws) * p)).norm() < 1e-13 * bs.norm());
    }
    CHECK_THROWS(em_wavelet_ft({Vec3(1, 0, 0), -1.0}, {Vec3(0, 0, 0.5), 1.0}, CVec3(1, 0, 0)));
  }
}
