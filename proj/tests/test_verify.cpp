#include <doctest.h>

#include <cmath>

#include "causal_beams/verify.hpp"

using namespace cb;

TEST_SUITE("verify") {
  TEST_CASE("report is deterministic") {
    VerifyOptions o;
    o.only = {1, 2, 6, 8};
    const auto a = run_verify_all(o);
    const auto b = run_verify_all(o);
    CHECK(report_json(a, o).dump() == report_json(b, o).dump());
    REQUIRE(a.size() == 4);
    for (const Criterion& c : a) CHECK(c.passed);
    CHECK(report_json(a, o).dump().find("runtime") == std::string::npos);
  }

  TEST_CASE("negative control: flipped Omega fails the cancellation check") {
    VerifyOptions o;
    o.only = {6};
    o.inject_fault = "omega-sign";
    const auto cs = run_verify_all(o);
    REQUIRE(cs.size() == 1);
    CHECK_FALSE(cs[0].passed);
    CHECK_FALSE(all_passed(cs));
  }

  TEST_CASE("summary line format") {
    Criterion c;
    c.id = 3;
    c.title = "x";
    c.passed = true;
    c.runtime_s = 0.5;
    c.budget_s = 1;
    CHECK(summary_line(c).rfind("C3 PASS x", 0) == 0);
    c.runtime_s = 2;
    CHECK_FALSE(all_passed({c}));
  }

  TEST_CASE("Maxwell residual detects a non-solution") {
    // circularly polarized plane wave along z: i dF/dt = curl F
    auto good = [](const Vec3& x, double t) {
      const cplx ph = std::exp(I * (x.z() - t));
      return CVec3(ph, I * ph, 0);
    };
    auto bad = [](const Vec3& x, double t) {
      const cplx ph = std::exp(I * (x.z() - 2 * t));
      return CVec3(ph, 0, 0);
    };
    const MaxwellResidual g = maxwell_residual(good, Vec3(0.1, 0.2, 0.3), 0.4);
    const MaxwellResidual b = maxwell_residual(bad, Vec3(0.1, 0.2, 0.3), 0.4);
    CHECK(g.curl < 1e-8);
    CHECK(g.div < 1e-8);
    CHECK(b.curl > 0.1);
  }
}
