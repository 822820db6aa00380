#include <doctest.h>

#include <cmath>

#include "causal_beams/scalar_beams.hpp"
#include "support.hpp"

using namespace cb;
using cbt::rel;

TEST_SUITE("scalar_beams") {
  TEST_CASE("propagator identities at random causal-tube points") {
    cbt::Rng r(21);
    for (int n = 0; n < 100; ++n) {
      const SpacetimePoint z = r.point();
      const cplx dp = extended_propagator(z, Causality::retarded);
      const cplx dm = extended_propagator(z, Causality::advanced);
      CHECK(rel(I * dm - I * dp, g4(z)) < 1e-12);
      const double s = 2.5;
      CHECK(rel(dp, extended_propagator(z.scaled(1 / s), Causality::retarded) / (s * s)) < 1e-12);
      const cplx rt = complex_distance(z.x, z.y).rt();
      CHECK(rel(extended_propagator_branch(z.tau(), -rt, Causality::retarded),
                -extended_propagator_branch(z.tau(), rt, Causality::advanced)) < 1e-12);
    }
  }

  TEST_CASE("causal tube is enforced") {
    CHECK_THROWS_AS(require_causal_tube({Vec3(0, 0, 1), 0.5}), CausalityError);
    CHECK_THROWS_AS(require_causal_tube({Vec3(0, 0, 1), -1.0}), CausalityError);
    CHECK_NOTHROW(require_causal_tube({Vec3(0, 0, 1), -1.01}));
    const SpacetimePoint z{Vec3(0, 0, 2), 0.0, {Vec3(0, 0, 1), 0.9}};
    CHECK_THROWS_AS(extended_propagator(z, Causality::retarded), CausalityError);
    CHECK_THROWS_AS(driven_beam(z, Impulse{}), CausalityError);
  }

  TEST_CASE("driven beams for the closed-form signals") {
    cbt::Rng r(22);
    for (int n = 0; n < 50; ++n) {
      const SpacetimePoint z = r.point();
      const cplx rt = complex_distance(z.x, z.y).rt();
      const double ub = z.y.u > 0 ? 1 : -1;
      CHECK(rel(driven_beam(z, Impulse{}), extended_propagator(z, Causality::retarded)) < 1e-12);
      CHECK(rel(driven_beam(z, Static{}), ub / (8 * pi * rt)) < 1e-12);
      const double w = ub * r.uni(0.2, 3);
      const cplx gt = ast(Harmonic{w}, z.tau()).g;
      CHECK(rel(driven_beam(z, Harmonic{w}), gt * harmonic_beam(z.x, z.y, w)) < 1e-12);
      CHECK(driven_beam(z, Harmonic{-w}) == cplx(0.0));
    }
  }

  TEST_CASE("harmonic beam") {
    const Vec3 x(0.3, -0.4, 1.2);
    const double w = 1.3;
    const double rr = x.norm();
    CHECK(rel(harmonic_beam(x, {Vec3::Zero(), 1.0}, w), std::exp(I * w * rr) / (4 * pi * rr)) < 1e-15);
    const cplx rt(2, -1);
    CHECK(rel(harmonic_beam({0, 0, 2}, {Vec3(0, 0, 1), 2.0}, 1.0), std::exp(I * rt) / (4 * pi * rt)) < 1e-14);
    cbt::Rng r(23);
    for (int n = 0; n < 50; ++n) {
      const SpacetimePoint z = r.point();
      const SourcePoint yc{-z.y.y, z.y.u};
      CHECK(rel(harmonic_beam(z.x, z.y, -w), std::conj(harmonic_beam(z.x, yc, w))) < 1e-13);
    }
  }

  TEST_CASE("nu wavelets") {
    cbt::Rng r(24);
    for (int n = 0; n < 50; ++n) {
      const SpacetimePoint z = r.point(+1);
      const NuWavelet w0 = nu_wavelet(z, 0);
      CHECK(rel(w0.psi, -g4(z)) < 1e-12);
      CHECK(rel(w0.psi_plus + w0.psi_minus, w0.psi) < 1e-13);
      for (int nu : {0, 1, 3}) {
        const SpacetimePoint zm = r.point();
        CHECK(rel(nu_wavelet(zm.negated(), nu).psi, -nu_wavelet(zm, nu).psi) < 1e-12);
      }
      // nu = 1 is -d/du of nu = 0
      const double h = 1e-4;
      SpacetimePoint zp = z, zq = z;
      zp.y.u += h;
      zq.y.u -= h;
      const cplx du = (nu_wavelet(zp, 0).psi - nu_wavelet(zq, 0).psi) / (2 * h);
      CHECK(rel(nu_wavelet(z, 1).psi, -du) < 1e-6);
    }
    CHECK_THROWS(nu_wavelet(r.point(), -1));
  }

  TEST_CASE("peak pattern") {
    const SourcePoint y{Vec3(0, 0, 1), 1.5};
    CHECK(peak_pattern(0, y) == doctest::Approx(1 / pi).epsilon(1e-15));
    CHECK(peak_pattern(pi, y) == doctest::Approx(1 / (5 * pi)).epsilon(1e-15));
    CHECK(peak_pattern(0.3, y) == doctest::Approx(peak_pattern(-0.3, y)).epsilon(1e-15));
  }

  TEST_CASE("Minkowski probe: support misses the light cone") {
    SpacetimeBump f;
    f.center = Vec3(0, 0, 5);
    f.t0 = 0;
    f.width_x = f.width_t = 1;
    f.compact = true;
    ProbeOptions opt;
    opt.spatial_nodes = 12;
    const auto res = minkowski_limit_probe(f, {Vec3(0, 0, 1), 1.5}, {0.1, 0.05, 0.025}, Causality::retarded, opt);
    CHECK(res.converged);
    CHECK(std::abs(res.extrapolated) < 1e-8);
    CHECK(shell_integral(f, +1) == 0.0);
  }

  TEST_CASE("Minkowski probe: serial and parallel agree bitwise") {
    SpacetimeBump f;
    f.center = Vec3(0.3, 0.1, 1.0);
    f.t0 = f.center.norm();
    f.width_x = f.width_t = 0.4;
    f.compact = true;
    ProbeOptions opt;
    opt.spatial_nodes = 10;
    opt.t_spec = {1e-8, 1e-14, 400};
    const SourcePoint y{Vec3(0, 0, 0.5), 1.0};
    const std::vector<double> eps{0.1, 0.05};
    const auto par = minkowski_limit_probe(f, y, eps, Causality::retarded, opt);
    opt.parallel = false;
    const auto ser = minkowski_limit_probe(f, y, eps, Causality::retarded, opt);
    REQUIRE(par.values.size() == ser.values.size());
    for (size_t i = 0; i < par.values.size(); ++i) CHECK(par.values[i] == ser.values[i]);
    CHECK(par.extrapolated == ser.extrapolated);
  }
}
