#pragma once

#include <vector>

#include "causal_beams/grid.hpp"
#include "causal_beams/scalar_beams.hpp"

namespace cb {

// Time-peak amplitude max_t |D~+(x, t)|, located by golden-section search
// over t in [r - a - 1, r + a + 1].
double time_peak_amplitude(const Vec3& x, const SourcePoint& y);

// Angular FWHM (radians) of the time-peak amplitude on the sphere |x| = r0,
// scanned in the plane containing y_hat, with the half-maximum crossing
// located by linear interpolation.
double angular_fwhm(const SourcePoint& y, double r0, int n_theta = 20001);

// Closed-form FWHM of R(theta) = 1 / (2 pi |u - a cos(theta)|); pi when the
// half maximum is never reached.
double angular_fwhm_closed(const SourcePoint& y);

struct RidgeReport {
  double t = 0;
  int columns = 0;           // forward columns examined
  double max_offset = 0;     // max distance from E_t in grid steps
  bool passed = false;
};

// Along each column x1 = const of a frame of |D~+|^2, the x3 > 0 argmax is
// compared with the wavefront p = t. Only beam-core columns count: those whose
// argmax has pulse duration |u| - q sgn(u) within 5 grid steps, where the pulse
// is resolved. Offset = |p - t| / |grad p| in grid steps.
RidgeReport ridge_check(const SliceGrid& g, const std::vector<cplx>& frame, const SourcePoint& y, double t);

// Presets: grids are offset by half a step so no node falls on the branch circle.
SliceGrid fig2_grid(int n = 400);
SliceGrid fig3_grid(int n = 400);
std::vector<double> fig2_u_values();
std::vector<double> fig3_times();

}  // namespace cb
