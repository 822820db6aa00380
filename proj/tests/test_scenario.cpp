#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "causal_beams/figures.hpp"
#include "causal_beams/scenario.hpp"

using namespace cb;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("causal_beams_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Scenario small_field() {
  Scenario s;
  s.kind = "field";
  s.u = 1.3;
  s.x1 = {-2, 2, 21};
  s.x3 = {-2, 2, 21};
  s.x1.min += 0.1;
  s.x1.max += 0.1;
  s.times = {0.5, 1.5};
  s.prefix = "small";
  return s;
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("JSON round trip") {
    std::vector<Scenario> ss{small_field(), preset("fig2-u1.01"), preset("fig3"), preset("sphere")};
    Scenario sp;
    sp.kind = "source-test";
    sp.signal.type = "sampled";
    sp.signal.times = {-1, 0, 1};
    sp.signal.values = {0, 1, 0};
    sp.test_function.type = "poly_bump";
    sp.test_function.m = {1, 2, 3, 2, 4, 5, 3, 5, 6};
    sp.weyl_points = {{0.5, 1.0, 1.0, 2.0}};
    sp.jump_points = {{0.0, 1.0, 1.0}};
    ss.push_back(sp);
    for (const Scenario& s : ss) {
      const json j = s;
      const Scenario back = j.get<Scenario>();
      CHECK(json(back).dump() == j.dump());
      CHECK(json::parse(j.dump()).get<Scenario>().kind == s.kind);
    }
  }

  TEST_CASE("validation") {
    Scenario s = small_field();
    CHECK_NOTHROW(s.validate());
    s.u = 0.9;
    CHECK_THROWS(s.validate());
    s = small_field();
    s.kind = "movie";
    CHECK_THROWS(s.validate());
    s = small_field();
    s.x1 = {-2, 2, 21};  // node (1, 0) on the branch circle
    CHECK_THROWS_WITH(s.validate(), doctest::Contains("branch circle"));
    s = small_field();
    s.formats = {"png"};
    CHECK_THROWS(s.validate());
    s = small_field();
    s.kind = "em-field";
    s.component = 3;
    CHECK_THROWS(s.validate());
    s = small_field();
    s.times.clear();
    CHECK_THROWS(s.validate());
    CHECK_THROWS(preset("fig4"));
    for (const auto& name : {"fig2-u1.5", "fig2-u1.1", "fig2-u1.01", "fig2-u1.001", "fig3", "sphere"})
      CHECK_NOTHROW(preset(name).validate());
  }

  TEST_CASE("malformed JSON is rejected") {
    const fs::path d = scratch_dir("bad");
    std::ofstream(d / "a.json") << R"({"kind": "field", "grid": {"x1": [0, 1]}})";
    CHECK_THROWS(load_scenario((d / "a.json").string()));
    std::ofstream(d / "b.json") << "{ not json";
    CHECK_THROWS(load_scenario((d / "b.json").string()));
    CHECK_THROWS(load_scenario((d / "missing.json").string()));
  }

  TEST_CASE("field output files") {
    const fs::path d = scratch_dir("field");
    const Scenario s = small_field();
    const auto frames = run_scenario(s, d.string());
    REQUIRE(frames.size() == 2);
    CHECK(fs::exists(d / "small.csv"));
    CHECK(fs::exists(d / "small.json"));
    for (const char* f : {"small_000.pgm", "small_001.pgm"}) {
      std::ifstream in(d / f, std::ios::binary);
      std::string magic;
      int w = 0, h = 0, mx = 0;
      in >> magic >> w >> h >> mx;
      CHECK(magic == "P5");
      CHECK(w == 21);
      CHECK(h == 21);
      CHECK(mx == 255);
      CHECK(fs::file_size(d / f) == static_cast<std::uintmax_t>(std::string("P5\n21 21\n255\n").size() + 21 * 21));
    }
    std::ifstream csv(d / "small.csv");
    std::string line;
    std::getline(csv, line);
    CHECK(line == "x1,x3,t,Re,Im,Abs");
    int rows = 0;
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 2 * 21 * 21);
    const json side = json::parse(std::ifstream(d / "small.json"));
    CHECK(side["frames"].size() == 2);
    CHECK(side["frames"][1]["max_abs"].get<double>() == doctest::Approx(frames[1].max_abs));
    CHECK(side["scenario"].get<Scenario>().u == 1.3);
  }

  TEST_CASE("a = 0 gives spherically symmetric frames") {
    Scenario s = preset("sphere");
    s.x1.n = s.x3.n = 120;
    const SliceGrid g0 = fig3_grid(120);
    s.x1 = {g0.x1_min, g0.x1_max, 120};
    s.x3 = {g0.x3_min, g0.x3_max, 120};
    const auto frames = sample_field(s);
    const int n = 120;
    double worst = 0;
    for (const Frame& fr : frames)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          const cplx v = fr.values[j * n + i];
          worst = std::max({worst, std::abs(v - fr.values[i * n + j]) / fr.max_abs,
                            std::abs(v - fr.values[j * n + (n - 1 - i)]) / fr.max_abs});
        }
    CHECK(worst <= 1e-10);
  }

  TEST_CASE("spectrum, weyl and source outputs") {
    const fs::path d = scratch_dir("other");
    Scenario s;
    s.kind = "spectrum";
    s.spectrum = "pulsed";
    s.kz = {-1, 1, 5};
    s.omega = {0.7, 0.7, 1};
    s.prefix = "sp";
    run_scenario(s, d.string());
    std::ifstream in(d / "sp_spectrum.csv");
    std::string line;
    std::getline(in, line);
    CHECK(line == "kx,ky,kz,omega,Re,Im");

    s.signal.type = "harmonic";
    s.signal.omega0 = 1;
    CHECK_THROWS(run_scenario(s, d.string()));

    Scenario w;
    w.kind = "weyl-verify";
    w.weyl_points = {{0.5, 1.0, 1.0, 2.0}};
    w.jump_points = {{0.0, 1.0, 1.0}};
    w.prefix = "wv";
    run_scenario(w, d.string());
    CHECK(fs::exists(d / "wv_weyl.csv"));
    CHECK(fs::exists(d / "wv_jump.csv"));

    Scenario t;
    t.kind = "source-test";
    t.prefix = "st";
    t.y = {0, 0, 0.5};
    t.u = 1.0;
    t.test_function.center = {0.1, 0, 0.2};
    t.test_function.sigma = 0.7;
    run_scenario(t, d.string());
    const json r = json::parse(std::ifstream(d / "st_source.json"));
    const auto re = [](const json& v) { return cplx(v[0].get<double>(), v[1].get<double>()); };
    CHECK(std::abs(re(r["shielded_extrapolated"]) - re(r["bare"]["value"])) < 1e-6);
    CHECK(std::abs(re(r["volume_oracle"]["value"]) - re(r["shielded_at_oracle_eps"]["value"])) < 1e-6);
    CHECK(r["volume_oracle"]["converged"].get<bool>());
  }
}
