#include "causal_beams/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "causal_beams/em.hpp"
#include "causal_beams/figures.hpp"
#include "causal_beams/scalar_beams.hpp"
#include "causal_beams/spectral.hpp"
#include "causal_beams/weyl.hpp"

namespace cb {

using nlohmann::json;

DrivingSignal SignalSpec::build() const {
  if (type == "impulse") return Impulse{};
  if (type == "static") return Static{};
  if (type == "harmonic") return Harmonic{omega0};
  if (type == "sampled") {
    if (!csv.empty()) return SampledSignal::from_csv(csv);
    return SampledSignal(times, values);
  }
  throw std::invalid_argument("unknown signal type '" + type + "'");
}

std::vector<double> AxisSpec::nodes() const {
  if (n < 1) throw std::invalid_argument("axis: n must be >= 1");
  if (n == 1) return {min};
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = min + (max - min) * i / (n - 1);
  return v;
}

TestFunction TestFunctionSpec::build() const {
  const Vec3 c(center[0], center[1], center[2]);
  if (type == "gaussian") return catalog::gaussian_bump(c, sigma);
  if (type == "poly_bump") {
    Eigen::Matrix3d M;
    M << m[0], m[1], m[2], m[3], m[4], m[5], m[6], m[7], m[8];
    return catalog::poly_bump(c, sigma, c0, Vec3(b[0], b[1], b[2]), M);
  }
  if (type == "plane_wave") return catalog::plane_wave(Vec3(k[0], k[1], k[2]));
  if (type == "compact_bump") return catalog::compact_bump(c, sigma);
  if (type == "one") return catalog::constant_one();
  throw std::invalid_argument("unknown test function type '" + type + "'");
}

SourcePoint Scenario::source() const { return {Vec3(y[0], y[1], y[2]), u}; }

SliceGrid Scenario::grid() const { return {x1.min, x1.max, x3.min, x3.max, x1.n, x3.n}; }

void Scenario::validate() const {
  static const char* kinds[] = {"field", "em-field", "spectrum", "weyl-verify", "source-test"};
  if (std::find(std::begin(kinds), std::end(kinds), kind) == std::end(kinds))
    throw std::invalid_argument("scenario: unknown kind '" + kind + "'");
  const SourcePoint sp = source();
  if (kind == "field" || kind == "em-field" || kind == "source-test") require_causal_tube(sp);
  if (kind == "field" || kind == "em-field") {
    const SliceGrid g = grid();
    g.validate();
    if (times.empty()) throw std::invalid_argument("scenario: times must not be empty");
    const double a = sp.a();
    const double step = std::min(g.dx1(), g.dx3());
    if (a > 0) {
      const AxisFrame fr = axis_frame(sp);
      for (int j = 0; j < g.n3; ++j)
        for (int i = 0; i < g.n1; ++i) {
          const Vec3 x = g.node(i, j);
          const double xi = x.dot(fr.e3);
          const double rho = (x - xi * fr.e3).norm();
          if (std::hypot(rho - a, xi) < 0.25 * step) {
            std::ostringstream o;
            o << "scenario: grid node (" << x.x() << ", " << x.z() << ") lies within a quarter step of the branch circle";
            throw std::invalid_argument(o.str());
          }
          if (kind == "em-field" && rho < a && std::abs(xi) < 0.25 * step)
            throw std::invalid_argument("scenario: em-field grid node lies on the source disk");
        }
    }
    if (component < 0 || component > 2) throw std::invalid_argument("scenario: component must be 0, 1 or 2");
  }
  for (const auto& f : formats)
    if (f != "csv" && f != "pgm") throw std::invalid_argument("scenario: unknown output format '" + f + "'");
}

namespace {

json axis_json(const AxisSpec& a) { return json::array({a.min, a.max, a.n}); }
AxisSpec axis_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("scenario: axis must be [min, max, n]");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<int>()};
}

}  // namespace

void to_json(json& j, const Scenario& s) {
  json sig = {{"type", s.signal.type}};
  if (s.signal.type == "harmonic") sig["omega0"] = s.signal.omega0;
  if (s.signal.type == "sampled") {
    if (!s.signal.csv.empty()) sig["csv"] = s.signal.csv;
    else {
      sig["times"] = s.signal.times;
      sig["values"] = s.signal.values;
    }
  }
  const auto& tf = s.test_function;
  j = json{{"kind", s.kind},
           {"y", s.y},
           {"u", s.u},
           {"signal", sig},
           {"quantity", s.quantity},
           {"grid", {{"x1", axis_json(s.x1)}, {"x3", axis_json(s.x3)}}},
           {"times", s.times},
           {"dipole", s.dipole},
           {"component", s.component},
           {"spectrum",
            {{"quantity", s.spectrum},
             {"kx", axis_json(s.kx)},
             {"ky", axis_json(s.ky)},
             {"kz", axis_json(s.kz)},
             {"omega", axis_json(s.omega)},
             {"eps", s.eps}}},
           {"weyl", {{"points", s.weyl_points}, {"jump", s.jump_points}}},
           {"source",
            {{"test_function",
              {{"type", tf.type}, {"center", tf.center}, {"sigma", tf.sigma}, {"c0", tf.c0}, {"b", tf.b}, {"m", tf.m},
               {"k", tf.k}}},
             {"t", s.t},
             {"eps_schedule", s.eps_schedule},
             {"oracle_eps", s.oracle_eps}}},
           {"output", {{"prefix", s.prefix}, {"formats", s.formats}}},
           {"seed", s.seed}};
}

void from_json(const json& j, Scenario& s) {
  s = Scenario{};
  s.kind = j.value("kind", s.kind);
  s.y = j.value("y", s.y);
  s.u = j.value("u", s.u);
  if (j.contains("signal")) {
    const json& g = j["signal"];
    s.signal.type = g.value("type", s.signal.type);
    s.signal.omega0 = g.value("omega0", 0.0);
    s.signal.csv = g.value("csv", std::string());
    s.signal.times = g.value("times", std::vector<double>{});
    s.signal.values = g.value("values", std::vector<double>{});
  }
  s.quantity = j.value("quantity", s.quantity);
  if (j.contains("grid")) {
    if (j["grid"].contains("x1")) s.x1 = axis_from(j["grid"]["x1"]);
    if (j["grid"].contains("x3")) s.x3 = axis_from(j["grid"]["x3"]);
  }
  s.times = j.value("times", s.times);
  s.dipole = j.value("dipole", s.dipole);
  s.component = j.value("component", s.component);
  if (j.contains("spectrum")) {
    const json& sp = j["spectrum"];
    s.spectrum = sp.value("quantity", s.spectrum);
    if (sp.contains("kx")) s.kx = axis_from(sp["kx"]);
    if (sp.contains("ky")) s.ky = axis_from(sp["ky"]);
    if (sp.contains("kz")) s.kz = axis_from(sp["kz"]);
    if (sp.contains("omega")) s.omega = axis_from(sp["omega"]);
    s.eps = sp.value("eps", s.eps);
  }
  if (j.contains("weyl")) {
    s.weyl_points = j["weyl"].value("points", s.weyl_points);
    s.jump_points = j["weyl"].value("jump", s.jump_points);
  }
  if (j.contains("source")) {
    const json& so = j["source"];
    if (so.contains("test_function")) {
      const json& tf = so["test_function"];
      auto& d = s.test_function;
      d.type = tf.value("type", d.type);
      d.center = tf.value("center", d.center);
      d.sigma = tf.value("sigma", d.sigma);
      d.c0 = tf.value("c0", d.c0);
      d.b = tf.value("b", d.b);
      d.m = tf.value("m", d.m);
      d.k = tf.value("k", d.k);
    }
    s.t = so.value("t", s.t);
    s.eps_schedule = so.value("eps_schedule", s.eps_schedule);
    s.oracle_eps = so.value("oracle_eps", s.oracle_eps);
  }
  if (j.contains("output")) {
    s.prefix = j["output"].value("prefix", s.prefix);
    s.formats = j["output"].value("formats", s.formats);
  }
  s.seed = j.value("seed", s.seed);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("scenario " + path + ": " + e.what());
  }
  Scenario s = j.get<Scenario>();
  s.validate();
  return s;
}

Scenario preset(const std::string& name) {
  Scenario s;
  s.kind = "field";
  s.quantity = "propagator";
  s.y = {0, 0, 1};
  if (name.rfind("fig2-u", 0) == 0) {
    s.u = std::stod(name.substr(6));
    const SliceGrid g = fig2_grid(400);
    s.x1 = {g.x1_min, g.x1_max, g.n1};
    s.x3 = {g.x3_min, g.x3_max, g.n3};
    s.times = {10.0};
    s.prefix = name;
    return s;
  }
  if (name == "fig3" || name == "sphere") {
    s.u = 1.01;
    if (name == "sphere") s.y = {0, 0, 0};
    const SliceGrid g = fig3_grid(400);
    s.x1 = {g.x1_min, g.x1_max, g.n1};
    s.x3 = {g.x3_min, g.x3_max, g.n3};
    s.times = {0.1, 1.0, 2.0, 3.0};
    s.prefix = name;
    return s;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<Frame> sample_field(const Scenario& s) {
  s.validate();
  const SourcePoint y = s.source();
  const SliceGrid g = s.grid();
  const DrivingSignal sig = s.signal.build();
  const CVec3 p(cplx(s.dipole[0], s.dipole[3]), cplx(s.dipole[1], s.dipole[4]), cplx(s.dipole[2], s.dipole[5]));
  std::vector<Frame> frames;
  for (double t : s.times) {
    PointField f;
    if (s.kind == "field") {
      if (s.quantity == "propagator" || s.quantity == "advanced") {
        const Causality c = s.quantity == "propagator" ? Causality::retarded : Causality::advanced;
        f = [&, t, c](const Vec3& x) { return extended_propagator({x, t, y}, c); };
      } else if (s.quantity == "driven") {
        f = [&, t](const Vec3& x) { return driven_beam({x, t, y}, sig); };
      } else {
        throw std::invalid_argument("field: unknown quantity '" + s.quantity + "'");
      }
    } else if (s.kind == "em-field") {
      const int c = s.component;
      if (s.quantity == "retarded" || s.quantity == "advanced") {
        const Causality w = s.quantity == "retarded" ? Causality::retarded : Causality::advanced;
        f = [&, t, c, w](const Vec3& x) { return dipole_field({x, t, y}, p, w)(c); };
      } else if (s.quantity == "dyadic") {
        f = [&, t, c](const Vec3& x) { return cplx(2.0) * (wavelet_dyadic({x, t, y}) * p)(c); };
      } else {
        throw std::invalid_argument("em-field: unknown quantity '" + s.quantity + "'");
      }
    } else {
      throw std::invalid_argument("sample_field: scenario kind is not a field kind");
    }
    Frame fr;
    fr.t = t;
    fr.values = sample_slice(g, f);
    for (const cplx& v : fr.values) fr.max_abs = std::max(fr.max_abs, std::abs(v));
    frames.push_back(std::move(fr));
  }
  return frames;
}

void write_pgm(const std::string& path, int width, int height, const std::vector<cplx>& v, double max_abs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "P5\n" << width << " " << height << "\n255\n";
  std::vector<unsigned char> row(width);
  for (int r = 0; r < height; ++r) {
    const int j = height - 1 - r;  // top row = largest x3
    for (int i = 0; i < width; ++i) {
      const double s = max_abs > 0 ? std::abs(v[j * width + i]) / max_abs : 0.0;
      row[i] = static_cast<unsigned char>(std::lround(255.0 * std::clamp(s, 0.0, 1.0)));
    }
    out.write(reinterpret_cast<const char*>(row.data()), width);
  }
}

namespace {

std::string frame_tag(size_t k) {
  std::ostringstream o;
  o << std::setw(3) << std::setfill('0') << k;
  return o.str();
}

bool wants(const Scenario& s, const std::string& f) {
  return std::find(s.formats.begin(), s.formats.end(), f) != s.formats.end();
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << std::setprecision(17);
  return out;
}

}  // namespace

void write_frames(const Scenario& s, const std::vector<Frame>& frames, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const SliceGrid g = s.grid();
  json side;
  side["scenario"] = s;
  side["frames"] = json::array();
  std::ofstream csv;
  if (wants(s, "csv")) {
    csv = open_csv(out_dir + "/" + s.prefix + ".csv");
    csv << "x1,x3,t,Re,Im,Abs\n";
  }
  for (size_t k = 0; k < frames.size(); ++k) {
    const Frame& fr = frames[k];
    json fj = {{"t", fr.t}, {"max_abs", fr.max_abs}};
    if (wants(s, "pgm")) {
      const std::string name = s.prefix + "_" + frame_tag(k) + ".pgm";
      write_pgm(out_dir + "/" + name, g.n1, g.n3, fr.values, fr.max_abs);
      fj["pgm"] = name;
    }
    if (csv.is_open())
      for (int j = 0; j < g.n3; ++j)
        for (int i = 0; i < g.n1; ++i) {
          const Vec3 x = g.node(i, j);
          const cplx v = fr.values[j * g.n1 + i];
          csv << x.x() << "," << x.z() << "," << fr.t << "," << v.real() << "," << v.imag() << "," << std::abs(v)
              << "\n";
        }
    side["frames"].push_back(fj);
  }
  std::ofstream(out_dir + "/" + s.prefix + ".json") << side.dump(2) << "\n";
}

namespace {

void run_spectrum(const Scenario& s, const std::string& out_dir) {
  const SourcePoint y = s.source();
  const DrivingSignal sig = s.signal.build();
  const auto kx = s.kx.nodes(), ky = s.ky.nodes(), kz = s.kz.nodes(), om = s.omega.nodes();
  const int n = static_cast<int>(kx.size() * ky.size() * kz.size() * om.size());
  auto at = [&](int idx, Vec3& k, double& w) {
    int r = idx;
    w = om[r % om.size()];
    r /= om.size();
    k.z() = kz[r % kz.size()];
    r /= kz.size();
    k.y() = ky[r % ky.size()];
    r /= ky.size();
    k.x() = kx[r];
  };
  auto value = [&](int idx) -> cplx {
    Vec3 k;
    double w;
    at(idx, k, w);
    SpectralValue v;
    if (s.spectrum == "bare") v = bare_source_ft({k, w}, y, sig);
    else if (s.spectrum == "shielded") v = shielded_source_ft({k, w}, y, sig, s.eps);
    else if (s.spectrum == "event") return event_source_ft({k, w}, y);
    else if (s.spectrum == "static") return static_source_ft(k, y);
    else if (s.spectrum == "pulsed") v = pulsed_beam_ft({k, w}, y, sig);
    else throw std::invalid_argument("spectrum: unknown quantity '" + s.spectrum + "'");
    if (std::holds_alternative<DeltaLine>(v))
      throw std::invalid_argument("spectrum: " + signal_name(sig) +
                                  " has a delta-line spectrum; use an impulse or sampled signal, or quantity 'static'");
    return std::get<cplx>(v);
  };
  const std::vector<cplx> vals = evaluate_batch(n, value);
  std::filesystem::create_directories(out_dir);
  auto csv = open_csv(out_dir + "/" + s.prefix + "_spectrum.csv");
  csv << "kx,ky,kz,omega,Re,Im\n";
  for (int i = 0; i < n; ++i) {
    Vec3 k;
    double w;
    at(i, k, w);
    csv << k.x() << "," << k.y() << "," << k.z() << "," << w << "," << vals[i].real() << "," << vals[i].imag() << "\n";
  }
}

void run_weyl(const Scenario& s, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto csv = open_csv(out_dir + "/" + s.prefix + "_weyl.csv");
  csv << "rho,xi,a,omega,component,Re,Im,closed_Re,closed_Im,abs_err,err_est\n";
  for (const auto& pt : s.weyl_points) {
    const auto [rho, xi, a, w] = pt;
    const WeylComponent c = weyl_eval(rho, xi, a, w);
    const cplx B = harmonic_beam(Vec3(rho, 0, xi), {Vec3(0, 0, a), 0.0}, w);
    csv << rho << "," << xi << "," << a << "," << w << "," << c.label << "," << c.value.real() << ","
        << c.value.imag() << "," << B.real() << "," << B.imag() << "," << std::abs(c.value - B) << "," << c.error
        << "\n";
  }
  auto jcsv = open_csv(out_dir + "/" + s.prefix + "_jump.csv");
  jcsv << "rho,a,omega,spectral_Re,spectral_Im,closed_Re,closed_Im,abs_err\n";
  for (const auto& pt : s.jump_points) {
    const auto [rho, a, w] = pt;
    const cplx js = jump_spectral(rho, a, w).value, jc = jump_closed(rho, a, w);
    jcsv << rho << "," << a << "," << w << "," << js.real() << "," << js.imag() << "," << jc.real() << ","
         << jc.imag() << "," << std::abs(js - jc) << "\n";
  }
}

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

void run_source_test(const Scenario& s, const std::string& out_dir) {
  const SourcePoint y = s.source();
  const DrivingSignal sig = s.signal.build();
  const TestFunction f = s.test_function.build();
  json r;
  r["signal"] = signal_name(sig);
  r["test_function"] = f.name;
  const SmearResult bare = bare_source_apply(f, y, sig, s.t);
  r["bare"] = {{"value", cjson(bare.value)}, {"error", bare.quadrature_error}};
  const EpsLimit lim = shielded_eps_limit(f, y, sig, s.t, s.eps_schedule);
  r["shielded_eps"] = s.eps_schedule;
  r["shielded_values"] = json::array();
  for (const cplx& v : lim.values) r["shielded_values"].push_back(cjson(v));
  r["shielded_extrapolated"] = cjson(lim.extrapolated);
  const SmearResult sh = shielded_source_apply(f, y, sig, s.t, s.oracle_eps);
  r["shielded_at_oracle_eps"] = {{"eps", s.oracle_eps},
                                 {"value", cjson(sh.value)},
                                 {"pole_terms", cjson(sh.pole_terms)},
                                 {"surface_term", cjson(sh.surface_term)}};
  if (std::isfinite(f.support_radius)) {
    const SmearResult vo = volume_oracle(f, y, sig, s.t, s.oracle_eps);
    r["volume_oracle"] = {{"value", cjson(vo.value)}, {"error", vo.quadrature_error}, {"converged", vo.converged}};
  }
  r["static_normalization"] =
      "unit-strength static source uses g~ = 1 (g0 = 2); with g0 = 1 the smear of f = 1 is u-bar/2";
  std::filesystem::create_directories(out_dir);
  std::ofstream(out_dir + "/" + s.prefix + "_source.json") << r.dump(2) << "\n";
}

}  // namespace

std::vector<Frame> run_scenario(const Scenario& s, const std::string& out_dir) {
  s.validate();
  if (s.kind == "field" || s.kind == "em-field") {
    auto frames = sample_field(s);
    write_frames(s, frames, out_dir);
    return frames;
  }
  if (s.kind == "spectrum") run_spectrum(s, out_dir);
  else if (s.kind == "weyl-verify") run_weyl(s, out_dir);
  else if (s.kind == "source-test") run_source_test(s, out_dir);
  return {};
}

}  // namespace cb
