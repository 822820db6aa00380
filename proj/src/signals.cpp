#include "causal_beams/signals.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_spline.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cb {

struct SampledSignal::Spline {
  gsl_spline* s = nullptr;
  ~Spline() {
    if (s) gsl_spline_free(s);
  }
};

SampledSignal::SampledSignal(std::vector<double> times, std::vector<double> values) {
  if (times.size() != values.size()) throw std::invalid_argument("SampledSignal: times/values size mismatch");
  if (times.size() < 3) throw std::invalid_argument("SampledSignal: need at least 3 samples");
  for (size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("SampledSignal: times must be strictly increasing");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("SampledSignal: non-finite sample");
  gsl_set_error_handler_off();
  auto sp = std::make_shared<Spline>();
  sp->s = gsl_spline_alloc(gsl_interp_cspline, times.size());
  gsl_spline_init(sp->s, times.data(), values.data(), times.size());
  times_ = std::make_shared<const std::vector<double>>(std::move(times));
  values_ = std::make_shared<const std::vector<double>>(std::move(values));
  spline_ = std::move(sp);
}

SampledSignal SampledSignal::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("SampledSignal: cannot open " + path);
  std::vector<double> t, v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (char& c : line)
      if (c == ',' || c == ';' || c == '\t') c = ' ';
    std::istringstream ss(line);
    double a, b;
    if (!(ss >> a >> b)) {
      if (t.empty()) continue;  // header row
      throw std::runtime_error("SampledSignal: malformed row in " + path + ": " + line);
    }
    t.push_back(a);
    v.push_back(b);
  }
  return SampledSignal(std::move(t), std::move(v));
}

double SampledSignal::operator()(double t) const {
  if (t < t_min() || t > t_max()) return 0.0;
  return gsl_spline_eval(spline_->s, t, nullptr);
}

std::string signal_name(const DrivingSignal& s) {
  struct V {
    std::string operator()(const Impulse&) const { return "impulse"; }
    std::string operator()(const Static&) const { return "static"; }
    std::string operator()(const Harmonic& h) const {
      std::ostringstream o;
      o << "harmonic(" << h.omega0 << ")";
      return o.str();
    }
    std::string operator()(const SampledSignal&) const { return "sampled"; }
  };
  return std::visit(V{}, s);
}

namespace {

double ubar(double u) { return u > 0 ? 1.0 : -1.0; }

double require_u(cplx tau) {
  const double u = -tau.imag();
  if (u == 0.0 || !std::isfinite(u)) throw std::domain_error("ast: Im tau must be nonzero (Cauchy kernel singular)");
  return u;
}

// Int g0(t') (tau - t')^{-n} dt' over the sample support.
cplx cauchy_moment(const SampledSignal& s, cplx tau, int n, const QuadratureSpec& spec) {
  std::vector<double> pts;
  const int pieces = 16;
  for (int i = 0; i <= pieces; ++i) pts.push_back(s.t_min() + (s.t_max() - s.t_min()) * i / pieces);
  const double c = tau.real();
  if (c > s.t_min() && c < s.t_max()) {
    pts.push_back(c);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end(), [](double x, double y) { return std::abs(x - y) < 1e-12; }),
              pts.end());
  }
  auto f = [&](double t) { return s(t) * std::pow(tau - t, -n); };
  QuadratureSpec sp = spec;
  sp.max_subdivisions = std::max(sp.max_subdivisions, 4000);
  auto r = adaptive_quad(f, pts, sp);
  if (!r.converged) throw QuadratureError("ast: Cauchy integral did not converge", r);
  return r.value;
}

}  // namespace

AnalyticSignalValue ast(const DrivingSignal& s, cplx tau, const QuadratureSpec& spec) {
  const double u = require_u(tau);
  if (std::holds_alternative<Impulse>(s)) {
    const cplx g = 1.0 / (2.0 * pi * I * tau);
    return {g, -g / tau};
  }
  if (std::holds_alternative<Static>(s)) return {ubar(u) / 2.0, 0.0};
  if (auto h = std::get_if<Harmonic>(&s)) {
    const double w = h->omega0;
    const double theta = w * u > 0 ? 1.0 : (w * u < 0 ? 0.0 : 0.5);
    const cplx g = ubar(u) * theta * std::exp(-I * w * tau);
    return {g, -I * w * g};
  }
  const auto& smp = std::get<SampledSignal>(s);
  const cplx k = 1.0 / (2.0 * pi * I);
  return {k * cauchy_moment(smp, tau, 1, spec), -k * cauchy_moment(smp, tau, 2, spec)};
}

cplx ast_second_derivative(const DrivingSignal& s, cplx tau, const QuadratureSpec& spec) {
  const double u = require_u(tau);
  if (std::holds_alternative<Impulse>(s)) return 1.0 / (pi * I * tau * tau * tau);
  if (std::holds_alternative<Static>(s)) return 0.0;
  if (auto h = std::get_if<Harmonic>(&s)) return -h->omega0 * h->omega0 * ast(s, tau).g;
  const double step = 1e-3 * std::abs(u);
  return (ast(s, tau + step, spec).g_prime - ast(s, tau - step, spec).g_prime) / (2.0 * step);
}

double cauchy_ft(double omega, double u) {
  if (u == 0.0) throw std::domain_error("cauchy_ft: u must be nonzero");
  const double wu = omega * u;
  const double theta = wu > 0 ? 1.0 : (wu < 0 ? 0.0 : 0.5);
  if (theta == 0.0) return 0.0;
  return ubar(u) * theta * std::exp(-wu);
}

cplx g_tilde(const DrivingSignal& s, cplx tau, double q, const QuadratureSpec& spec) {
  if (!(std::abs(tau.imag()) > std::abs(q))) throw std::domain_error("g_tilde: need |Im tau| > |q|");
  return 0.5 * (ast(s, tau + I * q, spec).g + ast(s, tau - I * q, spec).g);
}

SpectralValue source_spectrum(const DrivingSignal& s, double omega, const QuadratureSpec& spec) {
  if (std::holds_alternative<Impulse>(s)) return cplx(1.0);
  if (std::holds_alternative<Static>(s)) return DeltaLine{0.0, 2.0 * pi};
  if (auto h = std::get_if<Harmonic>(&s)) return DeltaLine{h->omega0, 2.0 * pi};
  const auto& smp = std::get<SampledSignal>(s);
  std::vector<double> pts;
  const int pieces = std::max(16, static_cast<int>(std::abs(omega) * (smp.t_max() - smp.t_min()) / pi));
  for (int i = 0; i <= pieces; ++i) pts.push_back(smp.t_min() + (smp.t_max() - smp.t_min()) * i / pieces);
  auto f = [&](double t) { return smp(t) * std::exp(I * omega * t); };
  QuadratureSpec sp = spec;
  sp.max_subdivisions = std::max(sp.max_subdivisions, 20000);
  auto r = adaptive_quad(f, pts, sp);
  if (!r.converged) throw QuadratureError("signal_ft: transform did not converge", r);
  return r.value;
}

SpectralValue signal_ft(const DrivingSignal& s, double omega, double u, const QuadratureSpec& spec) {
  if (u == 0.0) throw std::domain_error("signal_ft: u must be nonzero");
  return spectral_scale(source_spectrum(s, omega, spec), omega, [u](double w) { return cplx(cauchy_ft(w, u)); });
}

}  // namespace cb
