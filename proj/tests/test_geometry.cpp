#include <doctest.h>

#include <random>

#include "causal_beams/geometry.hpp"

using namespace cb;

namespace {

ComplexDistance cd(const Vec3& x, const Vec3& y) { return complex_distance(x, {y, 0.0}); }

// Principal sqrt(r^2 - a^2 - 2i x.y) with Re >= 0.
cplx reference_rt(const Vec3& x, const Vec3& y) {
  const cplx s = std::sqrt(cplx(x.squaredNorm() - y.squaredNorm(), -2 * x.dot(y)));
  return s.real() < 0 ? -s : s;
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("reference points") {
    auto c = cd({0, 0, 2}, {0, 0, 1});
    CHECK(c.p == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(c.q == doctest::Approx(1.0).epsilon(1e-15));
    auto e = cd({1, 2, 2}, Vec3::Zero());
    CHECK(e.p == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(e.q == 0.0);
    // on-disk point: xi -> +0 layer
    auto d = cd({0.5, 0, 0}, {0, 0, 1});
    CHECK(std::abs(d.p) < 1e-15);
    CHECK(d.q == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
    // extrapolated from xi = 1e-8
    const cplx off = reference_rt({0.5, 0, 1e-8}, {0, 0, 1});
    CHECK(std::abs(cplx(d.p, -d.q) - off) < 1e-7);
  }

  TEST_CASE("branch circle is rejected with its coordinates") {
    try {
      cd({0, 1, 0}, {0, 0, 1});
      FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
      CHECK(e.rho() == doctest::Approx(1.0));
      CHECK(e.xi() == 0.0);
    }
  }

  TEST_CASE("random points: invariants and principal branch") {
    std::mt19937_64 g(11);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int n = 0; n < 2000; ++n) {
      const Vec3 x(U(g), U(g), U(g)), y(U(g) / 2, U(g) / 2, U(g) / 2);
      const auto c = cd(x, y);
      const double a = y.norm(), s = x.squaredNorm() + a * a;
      CHECK(c.p >= 0);
      CHECK(std::abs(c.q) <= a * (1 + 1e-14));
      CHECK(std::abs(c.p * c.p - c.q * c.q - (x.squaredNorm() - a * a)) <= 1e-12 * s);
      CHECK(std::abs(c.p * c.q - a * c.xi) <= 1e-12 * s);
      CHECK(std::abs(a * a * c.rho * c.rho - (c.p * c.p + a * a) * (a * a - c.q * c.q)) <= 1e-12 * s * s);
      // double-valuedness: the negated other root squares to the same value
      const cplx rt = c.rt(), ref = reference_rt(x, y);
      CHECK(std::abs(rt - ref) <= 1e-12 * std::sqrt(s));
      CHECK(std::abs((-rt) * (-rt) - ref * ref) <= 1e-12 * s);
    }
  }

  TEST_CASE("cut confined to the disk") {
    const Vec3 y(0, 0, 1);
    for (double rho : {1.2, 2.0, 5.0}) {
      auto up = cd({rho, 0, 1e-12}, y), dn = cd({rho, 0, -1e-12}, y);
      CHECK(std::abs(up.p - dn.p) < 1e-10);
      CHECK(std::abs(up.q - dn.q) < 1e-10);
    }
    for (double rho : {0.0, 0.3, 0.9}) {
      auto up = cd({rho, 0, 1e-13}, y), dn = cd({rho, 0, -1e-13}, y);
      const double q0 = std::sqrt(1 - rho * rho);
      CHECK(up.q == doctest::Approx(q0).epsilon(1e-10));
      CHECK(dn.q == doctest::Approx(-q0).epsilon(1e-10));
    }
  }

  TEST_CASE("from_os round trip") {
    const SourcePoint y{Vec3(0, 0, 1), 0.0};
    const Vec3 x = from_os(2, 1, 0, y);
    CHECK((x - Vec3(0, 0, 2)).norm() < 1e-14);
    CHECK((from_os(0, 0, 0, y) - Vec3(1, 0, 0)).norm() < 1e-14);
    CHECK_THROWS(from_os(1, 1.5, 0, y));
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> U(0, 1);
    const SourcePoint yy{Vec3(0.3, -0.4, 0.5), 0.0};
    const double a = yy.a();
    for (int n = 0; n < 1000; ++n) {
      const double p = 0.01 + 3 * U(g), q = a * (2 * U(g) - 1), phi = 2 * pi * U(g);
      const auto c = complex_distance(from_os(p, q, phi, yy), yy);
      CHECK(std::abs(c.p - p) <= 1e-12 * std::max(1.0, p));
      CHECK(std::abs(c.q - q) <= 1e-12 * std::max(1.0, a));
    }
  }

  TEST_CASE("os_frame identities and finite differences") {
    const SourcePoint y{Vec3(0.2, 0.5, -0.4), 0.0};
    const double a = y.a();
    std::mt19937_64 g(9);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int n = 0; n < 200; ++n) {
      const Vec3 x(U(g), U(g), U(g));
      const auto c = complex_distance(x, y);
      if (std::hypot(c.rho - a, c.xi) < 0.2 || std::abs(c.xi) < 0.05) continue;
      const OsFrame f = os_frame(x, y);
      const double r2 = c.abs_sq();
      CHECK(std::abs(f.grad_p.squaredNorm() - f.grad_q.squaredNorm() - 1) < 1e-12);
      CHECK(std::abs(f.grad_p.dot(f.grad_q)) < 1e-12);
      CHECK(std::abs(f.grad_p.squaredNorm() - (a * a + c.p * c.p) / r2) < 1e-12);
      CHECK(std::abs(f.grad_q.squaredNorm() - (a * a - c.q * c.q) / r2) < 1e-12);
      CHECK(std::abs(f.lap_p - 2 * c.p / r2) < 1e-12 * (1 + std::abs(f.lap_p)));
      CHECK(std::abs(f.lap_q + 2 * c.q / r2) < 1e-12 * (1 + std::abs(f.lap_q)));
      // 6-point Laplacian
      const double h = 2e-4;
      double lap = -6 * c.p;
      for (int k = 0; k < 3; ++k)
        for (double s : {-h, h}) lap += complex_distance(x + s * Vec3::Unit(k), y).p;
      lap /= h * h;
      CHECK(std::abs(lap - f.lap_p) < 1e-5 * std::max(1.0, std::abs(f.lap_p)));
      Vec3 gp;
      for (int k = 0; k < 3; ++k)
        gp(k) = (complex_distance(x + 1e-5 * Vec3::Unit(k), y).p - complex_distance(x - 1e-5 * Vec3::Unit(k), y).p) / 2e-5;
      CHECK((gp - f.grad_p).norm() < 1e-7 * std::max(1.0, f.grad_p.norm()));
    }
    auto axis = os_frame({0, 0, 2}, {Vec3(0, 0, 1), 0.0});
    CHECK(axis.grad_p.squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("far zone") {
    const SourcePoint y{Vec3(0, 0, 1), 0.0};
    const double r = 100, th = pi / 4;
    const Vec3 x(r * std::sin(th), 0, r * std::cos(th));
    const auto c = complex_distance(x, y);
    const auto fz = far_zone(x, y);
    // p = r - a^2 sin^2(theta) / (2 r) + O(a^4 / r^3)
    CHECK(std::abs(c.p - fz.p) <= 1.0 / r);
    CHECK(std::abs(c.p - (fz.p - std::pow(std::sin(th), 2) / (2 * r))) <= 1e-6);
    CHECK(std::abs(c.q - fz.q) <= 1e-3);
    CHECK(fz.q == doctest::Approx(std::cos(th)).epsilon(1e-14));
    const auto e = far_zone({1, 2, 3}, {Vec3::Zero(), 0.0});
    const auto ec = complex_distance({1, 2, 3}, {Vec3::Zero(), 0.0});
    CHECK(e.p == ec.p);
    CHECK(ec.q == 0.0);
    for (double z : {0.5, 3.0, 50.0}) CHECK(complex_distance({0, 0, z}, y).q == 1.0);
  }

  TEST_CASE("a = 0 is the Euclidean case") {
    const SourcePoint y{Vec3::Zero(), 1.0};
    CHECK_FALSE(y.has_axis());
    const auto c = complex_distance({3, 4, 0}, y);
    CHECK(c.p == 5.0);
    CHECK(c.q == 0.0);
    CHECK(y.timelike());
  }
}
