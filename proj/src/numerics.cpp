#include "causal_beams/numerics.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include <map>
#include <mutex>

namespace cb {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: rel_tol must be > 0");
  if (!(abs_tol >= 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be >= 0");
  if (max_subdivisions < 1) throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
}

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j0: non-finite argument");
  return boost::math::cyl_bessel_j(0, x);
}

double bessel_j1(double x) {
  if (!std::isfinite(x)) throw std::domain_error("bessel_j1: non-finite argument");
  return boost::math::cyl_bessel_j(1, x);
}

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // legendre_p_zeros returns the non-negative roots in ascending order.
  const auto zeros = boost::math::legendre_p_zeros<double>(n);
  GaussRule rule;
  auto weight = [n](double x) {
    const double d = boost::math::legendre_p_prime(n, x);
    return 2.0 / ((1.0 - x * x) * d * d);
  };
  for (auto it2 = zeros.rbegin(); it2 != zeros.rend(); ++it2) {
    if (*it2 == 0.0) continue;
    rule.x.push_back(-*it2);
    rule.w.push_back(weight(*it2));
  }
  if (n % 2 == 1) {
    rule.x.push_back(0.0);
    rule.w.push_back(weight(0.0));
  }
  for (double z : zeros) {
    if (z == 0.0) continue;
    rule.x.push_back(z);
    rule.w.push_back(weight(z));
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

cplx extrapolate_to_zero(const std::vector<double>& h, const std::vector<cplx>& values) {
  if (h.empty() || h.size() != values.size())
    throw std::invalid_argument("extrapolate_to_zero: mismatched inputs");
  std::vector<cplx> p = values;
  const size_t n = h.size();
  for (size_t m = 1; m < n; ++m)
    for (size_t i = 0; i + m < n; ++i)
      p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
  return p[0];
}

}  // namespace cb
