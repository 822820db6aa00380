#include "causal_beams/grid.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>

namespace cb {

void SliceGrid::validate() const {
  if (n1 < 2 || n3 < 2) throw std::invalid_argument("SliceGrid: need at least 2 nodes per axis");
  if (!(x1_max > x1_min) || !(x3_max > x3_min)) throw std::invalid_argument("SliceGrid: empty extent");
}

std::vector<cplx> evaluate_batch_serial(int n, const std::function<cplx(int)>& f) {
  std::vector<cplx> out(n);
  for (int i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

std::vector<cplx> evaluate_batch(int n, const std::function<cplx(int)>& f) {
  std::vector<cplx> out(n);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic, 64)
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = f(i);
    } catch (...) {
#pragma omp critical(cb_batch_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<cplx> sample_slice_serial(const SliceGrid& g, const PointField& f) {
  g.validate();
  return evaluate_batch_serial(g.n1 * g.n3, [&](int k) { return f(g.node(k % g.n1, k / g.n1)); });
}

std::vector<cplx> sample_slice(const SliceGrid& g, const PointField& f) {
  g.validate();
  return evaluate_batch(g.n1 * g.n3, [&](int k) { return f(g.node(k % g.n1, k / g.n1)); });
}

int configure_threads() {
  if (const char* env = std::getenv("CAUSAL_BEAMS_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1)
      throw std::invalid_argument(std::string("CAUSAL_BEAMS_THREADS must be a positive integer, got '") + env + "'");
    omp_set_num_threads(static_cast<int>(n));
  }
  return omp_get_max_threads();
}

}  // namespace cb
