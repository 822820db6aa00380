#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "causal_beams/em.hpp"

namespace cb {

struct Check {
  std::string name;
  std::string expected;  // what the quantity should be, e.g. "max rel err <= tol"
  double got = 0;
  double tolerance = 0;
  bool passed = false;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  bool passed = false;
  double runtime_s = 0;
  double budget_s = 0;
  bool within_budget() const { return runtime_s < budget_s; }
};

struct VerifyOptions {
  double tol_scale = 1.0;  // strict profile: 0.1
  unsigned long long seed = 1;
  std::string inject_fault;  // "" or "omega-sign"
  std::vector<int> only;     // empty: all criteria
};

Criterion verify_geometry(const VerifyOptions& opt);
Criterion verify_propagator(const VerifyOptions& opt);
Criterion verify_minkowski(const VerifyOptions& opt);
Criterion verify_sources(const VerifyOptions& opt);
Criterion verify_fourier_source(const VerifyOptions& opt);
Criterion verify_cancellation(const VerifyOptions& opt);
Criterion verify_weyl(const VerifyOptions& opt);
Criterion verify_em(const VerifyOptions& opt);
Criterion verify_figures(const VerifyOptions& opt);

std::vector<Criterion> run_verify_all(const VerifyOptions& opt);

// Deterministic part of the report (no wall-clock data).
nlohmann::ordered_json report_json(const std::vector<Criterion>& cs, const VerifyOptions& opt);
nlohmann::ordered_json timings_json(const std::vector<Criterion>& cs);
// One line per criterion: "C<id> PASS|FAIL <title> (<runtime> s / <budget> s)".
std::string summary_line(const Criterion& c);
bool all_passed(const std::vector<Criterion>& cs);  // checks and runtime budgets

// Finite-difference Maxwell check for a field F(x, t): Richardson-extrapolated
// central differences with step h.
struct MaxwellResidual {
  double curl = 0;  // |i dF/dt - curl F| / |F|
  double div = 0;   // |div F| / |F|
};
using VectorField = std::function<CVec3(const Vec3&, double)>;
MaxwellResidual maxwell_residual(const VectorField& F, const Vec3& x, double t, double h = 1e-3);

}  // namespace cb
