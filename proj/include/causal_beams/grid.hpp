#pragma once

#include <functional>
#include <vector>

#include "causal_beams/geometry.hpp"

namespace cb {

// Rectilinear x1-x3 slice at x2 = 0; node (i, j) sits at row j, column i.
struct SliceGrid {
  double x1_min = -1, x1_max = 1;
  double x3_min = -1, x3_max = 1;
  int n1 = 2, n3 = 2;

  double dx1() const { return (x1_max - x1_min) / (n1 - 1); }
  double dx3() const { return (x3_max - x3_min) / (n3 - 1); }
  Vec3 node(int i, int j) const { return {x1_min + i * dx1(), 0.0, x3_min + j * dx3()}; }
  void validate() const;
};

using PointField = std::function<cplx(const Vec3&)>;

// Row-major (j * n1 + i) samples. The parallel version splits rows across
// OpenMP threads; results are bitwise identical to the serial reference.
std::vector<cplx> sample_slice(const SliceGrid& g, const PointField& f);
std::vector<cplx> sample_slice_serial(const SliceGrid& g, const PointField& f);

// out[i] = f(i) for i < n.
std::vector<cplx> evaluate_batch(int n, const std::function<cplx(int)>& f);
std::vector<cplx> evaluate_batch_serial(int n, const std::function<cplx(int)>& f);

// Honors CAUSAL_BEAMS_THREADS when set; returns the thread count in effect.
int configure_threads();

}  // namespace cb
