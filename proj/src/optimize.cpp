#include "qsup/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace qsup {

double bisect(const std::function<double(double)>& f, double lo, double hi,
              double residual_tol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::invalid_argument("bisect: endpoints do not bracket a root");
  }
  double mid = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    double fmid = f(mid);
    if (std::abs(fmid) < residual_tol) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-17 * (std::abs(lo) + std::abs(hi))) break;
  }
  return mid;
}

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double window) {
  const double inv_phi = 0.6180339887498949;  // 1/phi
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  // Each step shrinks the bracket by 1/phi, so the window is reached in
  // log(width/window)/log(phi) steps; the cap guards against stalling when
  // the requested window is below the bracket's floating-point resolution.
  int max_iter =
      b > a ? static_cast<int>(std::ceil(
                  std::log(std::max((b - a) / window, 1.0)) / 0.4812118250596)) +
                  4
            : 0;
  for (int iter = 0; iter < max_iter && b - a > window; ++iter) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

GridMin2d grid_min_2d(const std::function<double(double, double)>& f,
                      double x_lo, double x_hi, double y_lo, double y_hi,
                      int coarse_points, double window) {
  auto scan = [&f](double xa, double xb, double ya, double yb,
                   int points) -> GridMin2d {
    GridMin2d best{0.0, xa, ya};
    bool first = true;
    for (int i = 0; i < points; ++i) {
      double x = points == 1 ? xa : xa + (xb - xa) * i / (points - 1);
      for (int j = 0; j < points; ++j) {
        double y = points == 1 ? ya : ya + (yb - ya) * j / (points - 1);
        double v = f(x, y);
        if (first || v < best.value) {
          best = {v, x, y};
          first = false;
        }
      }
    }
    return best;
  };

  GridMin2d best = scan(x_lo, x_hi, y_lo, y_hi, coarse_points);
  // Shrink a box around the incumbent by 5x per round and rescan.  21 points
  // per side keeps the incumbent on the new grid (odd count, centred).
  double wx = (x_hi - x_lo) / std::max(1, coarse_points - 1) * 2.0;
  double wy = (y_hi - y_lo) / std::max(1, coarse_points - 1) * 2.0;
  const int refine_points = 21;
  while (wx > window || wy > window) {
    double xa = std::max(x_lo, best.x - wx);
    double xb = std::min(x_hi, best.x + wx);
    double ya = std::max(y_lo, best.y - wy);
    double yb = std::min(y_hi, best.y + wy);
    GridMin2d local = scan(xa, xb, ya, yb, refine_points);
    if (local.value < best.value) best = local;
    wx *= 0.2;
    wy *= 0.2;
  }
  return best;
}

}  // namespace qsup
