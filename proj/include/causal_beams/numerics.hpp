#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace cb {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;

  void validate() const;
};

struct QuadResult {
  cplx value{};
  double error = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
  bool converged = true;
};

// Thrown by callers that require convergence; carries the best estimate.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadResult& best() const { return best_; }

 private:
  QuadResult best_;
};

double bessel_j0(double x);
double bessel_j1(double x);

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

// Polynomial extrapolation of values(h) to h = 0 (Neville).
cplx extrapolate_to_zero(const std::vector<double>& h, const std::vector<cplx>& values);

namespace detail {

// Kronrod 15 / Gauss 7 nodes on [-1, 1] (QUADPACK qk15).
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  cplx value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const cplx fc = cplx(f(c));
  cplx resk = fc * wgk[7];
  cplx resg = fc * wg[3];
  double resabs = std::abs(fc) * wgk[7];
  std::array<cplx, 15> fv{};
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const cplx f1 = cplx(f(c - dx));
    const cplx f2 = cplx(f(c + dx));
    fv[j] = f1;
    fv[14 - j] = f2;
    resk += wgk[j] * (f1 + f2);
    resabs += wgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += wg[j / 2] * (f1 + f2);
  }
  const cplx mean = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += wgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  resk *= h;
  resg *= h;
  resabs *= std::abs(h);
  resasc *= std::abs(h);
  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * 2.220446049250313e-16 * resabs;
  if (resabs > 2.2250738585072014e-308 / (50.0 * 2.220446049250313e-16)) err = std::max(err, floor);
  return {a, b, resk, err};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod quadrature over [a, b], with optional
// interior breakpoints. Deterministic: bisects the worst segment each step.
template <class F>
QuadResult adaptive_quad(const F& f, const std::vector<double>& points, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (points.size() < 2) throw std::invalid_argument("adaptive_quad: need at least two points");
  for (size_t i = 1; i < points.size(); ++i)
    if (!(points[i] > points[i - 1])) throw std::invalid_argument("adaptive_quad: require a < b");

  std::priority_queue<detail::Segment> heap;
  cplx total{};
  double err = 0.0;
  for (size_t i = 1; i < points.size(); ++i) {
    auto s = detail::gk15(f, points[i - 1], points[i]);
    total += s.value;
    err += s.error;
    heap.push(s);
  }
  QuadResult r;
  r.evaluations = 15 * static_cast<int>(points.size() - 1);
  int splits = 0;
  while (err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (splits >= spec.max_subdivisions) {
      r.converged = false;
      break;
    }
    detail::Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {  // interval exhausted at machine precision
      r.converged = false;
      break;
    }
    heap.pop();
    auto left = detail::gk15(f, worst.a, mid);
    auto right = detail::gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    r.evaluations += 30;
    ++splits;
  }
  // Resum to shed accumulated cancellation in the running totals.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  r.value = total;
  r.error = err;
  r.subdivisions = splits;
  if (r.converged) r.converged = err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)) * 1.0000001;
  return r;
}

template <class F>
QuadResult adaptive_quad(const F& f, double a, double b, const QuadratureSpec& spec = {}) {
  return adaptive_quad(f, std::vector<double>{a, b}, spec);
}

// Fixed-order Gauss-Legendre on [a, b].
template <class F>
cplx gauss_fixed(const F& f, double a, double b, int n) {
  const auto& rule = gauss_legendre(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  cplx s{};
  for (size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * cplx(f(c + h * rule.x[i]));
  return s * h;
}

// Mean over one period of a smooth periodic function, trapezoid rule with
// node doubling until two successive doublings agree (guards against aliasing).
template <class F>
cplx periodic_mean(const F& f, int n0 = 16, double tol = 1e-14, int n_max = 16384) {
  int n = n0;
  cplx sum{};
  for (int j = 0; j < n; ++j) sum += cplx(f(2.0 * pi * j / n));
  cplx mean = sum / double(n);
  int agreed = 0;
  while (n < n_max && agreed < 2) {
    cplx add{};
    for (int j = 0; j < n; ++j) add += cplx(f(2.0 * pi * (j + 0.5) / n));
    sum += add;
    n *= 2;
    const cplx next = sum / double(n);
    agreed = std::abs(next - mean) <= tol * std::max(1.0, std::abs(next)) ? agreed + 1 : 0;
    mean = next;
  }
  return mean;
}

}  // namespace cb
