#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "causal_beams/grid.hpp"
#include "causal_beams/scenario.hpp"
#include "causal_beams/verify.hpp"

namespace {

struct Common {
  std::string scenario, preset, out = "out", dump;
  std::string profile = "default";
  unsigned long long seed = 1;
  bool seed_set = false;
};

cb::Scenario resolve(const Common& c, const std::string& kind) {
  if (c.scenario.empty() == c.preset.empty()) throw CLI::ValidationError("exactly one of --scenario / --preset is required");
  cb::Scenario s = c.preset.empty() ? cb::load_scenario(c.scenario) : cb::preset(c.preset);
  if (s.kind != kind)
    throw CLI::ValidationError("scenario kind '" + s.kind + "' does not match subcommand '" + kind + "'");
  if (c.seed_set) s.seed = c.seed;
  s.validate();
  if (!c.dump.empty()) std::ofstream(c.dump) << nlohmann::json(s).dump(2) << "\n";
  return s;
}

int run_kind(const Common& c, const std::string& kind) {
  const cb::Scenario s = resolve(c, kind);
  const auto frames = cb::run_scenario(s, c.out);
  if (!frames.empty())
    std::cout << "wrote " << frames.size() << " frame(s) of " << s.x1.n << "x" << s.x3.n << " to " << c.out << "\n";
  else
    std::cout << "wrote " << kind << " output to " << c.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex-source pulsed beams: field sampling, spectra and verification"};
  app.require_subcommand(1);
  Common c;
  std::string fault;
  std::vector<int> only;

  auto add_common = [&](CLI::App* sub, bool scenario) {
    if (scenario) {
      sub->add_option("--scenario", c.scenario, "scenario JSON file")->check(CLI::ExistingFile);
      sub->add_option("--dump-scenario", c.dump, "write the resolved scenario JSON here");
    }
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--tol-profile", c.profile, "tolerance profile")->check(CLI::IsMember({"strict", "default"}));
    sub->add_option_function<unsigned long long>(
        "--seed", [&](unsigned long long v) { c.seed = v, c.seed_set = true; }, "random seed");
  };

  auto* field = app.add_subcommand("field", "sample the scalar pulsed beam on an x1-x3 slice");
  add_common(field, true);
  field->add_option("--preset", c.preset, "fig2-u1.5 | fig2-u1.1 | fig2-u1.01 | fig2-u1.001 | fig3 | sphere");
  auto* em = app.add_subcommand("em-field", "sample an electromagnetic dipole pulsed beam component");
  add_common(em, true);
  auto* spectrum = app.add_subcommand("spectrum", "Fourier-domain source or beam on a (k, omega) grid");
  add_common(spectrum, true);
  auto* weyl = app.add_subcommand("weyl-verify", "Weyl quadrature and jump spectra against closed forms");
  add_common(weyl, true);
  auto* source = app.add_subcommand("source-test", "smear a source against a test function");
  add_common(source, true);
  auto* verify = app.add_subcommand("verify-all", "run every acceptance check and write a report");
  add_common(verify, false);
  verify->add_option("--only", only, "restrict to these criterion ids")->delimiter(',')->check(CLI::Range(1, 9));
  verify->add_option("--inject-fault", fault, "negative control")->check(CLI::IsMember({"omega-sign"}))->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    cb::configure_threads();
    if (verify->parsed()) {
      cb::VerifyOptions o;
      o.tol_scale = c.profile == "strict" ? 0.1 : 1.0;
      o.seed = c.seed;
      o.inject_fault = fault;
      o.only = only;
      const auto cs = cb::run_verify_all(o);
      std::filesystem::create_directories(c.out);
      std::ofstream(c.out + "/report.json") << cb::report_json(cs, o).dump(2) << "\n";
      std::ofstream(c.out + "/timings.json") << cb::timings_json(cs).dump(2) << "\n";
      for (const auto& k : cs) {
        std::cout << cb::summary_line(k) << "\n";
        for (const auto& chk : k.checks)
          if (!chk.passed) std::cout << "    failed: " << chk.name << ": got " << chk.got << ", expected " << chk.expected << "\n";
      }
      const bool ok = cb::all_passed(cs);
      std::cout << (ok ? "ALL PASS" : "FAILURES") << " (report: " << c.out << "/report.json)\n";
      return ok ? 0 : 1;
    }
    for (auto* sub : {field, em, spectrum, weyl, source})
      if (sub->parsed()) return run_kind(c, sub->get_name());
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
