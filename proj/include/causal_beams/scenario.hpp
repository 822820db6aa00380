#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "causal_beams/grid.hpp"
#include "causal_beams/signals.hpp"
#include "causal_beams/sources.hpp"

namespace cb {

struct SignalSpec {
  std::string type = "impulse";  // impulse | static | harmonic | sampled
  double omega0 = 0.0;
  std::string csv;               // sampled: two-column file, or inline samples below
  std::vector<double> times, values;

  DrivingSignal build() const;
};

struct AxisSpec {
  double min = 0, max = 0;
  int n = 1;
  std::vector<double> nodes() const;
};

struct TestFunctionSpec {
  std::string type = "gaussian";  // gaussian | poly_bump | plane_wave | compact_bump | one
  std::array<double, 3> center{0, 0, 0};
  double sigma = 0.5;
  double c0 = 1.0;
  std::array<double, 3> b{0, 0, 0};
  std::array<double, 9> m{0, 0, 0, 0, 0, 0, 0, 0, 0};
  std::array<double, 3> k{0, 0, 0};

  TestFunction build() const;
};

struct Scenario {
  std::string kind = "field";  // field | em-field | spectrum | weyl-verify | source-test
  std::array<double, 3> y{0, 0, 1};
  double u = 1.5;
  SignalSpec signal;

  // field / em-field
  std::string quantity = "propagator";  // field: propagator | advanced | driven; em: retarded | advanced | dyadic
  AxisSpec x1{-2, 2, 101}, x3{-2, 2, 101};
  std::vector<double> times{0.0};
  std::array<double, 6> dipole{0, 0, 1, 0, 0, 0};  // Re p, Im p
  int component = 2;                              // em: field component; dyadic: column

  // spectrum
  std::string spectrum = "bare";  // bare | shielded | event | static | pulsed
  AxisSpec kx{0, 0, 1}, ky{0, 0, 1}, kz{-2, 2, 41}, omega{1, 1, 1};
  double eps = 0.0;

  // weyl-verify: rows of (rho, xi, a, omega); jump rows of (rho, a, omega)
  std::vector<std::array<double, 4>> weyl_points;
  std::vector<std::array<double, 3>> jump_points;

  // source-test
  TestFunctionSpec test_function;
  double t = 0.0;
  std::vector<double> eps_schedule{0.02, 0.01, 0.005, 0.0025};
  double oracle_eps = 0.2;

  std::string prefix = "out";
  std::vector<std::string> formats{"csv", "pgm"};
  unsigned long long seed = 1;

  SourcePoint source() const;
  SliceGrid grid() const;
  // Checks field invariants: timelike y for beam kinds, grid nodes no closer
  // than a quarter step to the branch circle.
  void validate() const;
};

void to_json(nlohmann::json& j, const Scenario& s);
void from_json(const nlohmann::json& j, Scenario& s);
Scenario load_scenario(const std::string& path);

// Named presets: "fig2-u1.5", "fig2-u1.1", "fig2-u1.01", "fig2-u1.001", "fig3", "sphere".
Scenario preset(const std::string& name);

struct Frame {
  double t = 0;
  std::vector<cplx> values;
  double max_abs = 0;
};

// Runs the scenario, writing into out_dir; returns the sampled frames for field kinds.
std::vector<Frame> run_scenario(const Scenario& s, const std::string& out_dir);

std::vector<Frame> sample_field(const Scenario& s);
void write_frames(const Scenario& s, const std::vector<Frame>& frames, const std::string& out_dir);
// 8-bit binary PGM of |v| / max|v|.
void write_pgm(const std::string& path, int width, int height, const std::vector<cplx>& v, double max_abs);

}  // namespace cb
