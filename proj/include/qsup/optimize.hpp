#ifndef QSUP_OPTIMIZE_HPP
#define QSUP_OPTIMIZE_HPP

#include <functional>

namespace qsup {

// Root of f on [lo, hi] (f(lo) and f(hi) of opposite sign) by bisection,
// iterated until |f(mid)| < residual_tol or the bracket collapses.
double bisect(const std::function<double(double)>& f, double lo, double hi,
              double residual_tol);

// Minimum of a unimodal f on [lo, hi] by golden-section search, iterated
// until the bracket is narrower than window.
double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi, double window);

struct GridMin2d {
  double value;
  double x;
  double y;
};

// Minimum of f over the box [x_lo, x_hi] x [y_lo, y_hi]: full scan on a
// coarse grid (points per side), then repeated shrink-and-rescan around the
// incumbent until the box is below window wide.  Derivative-free, so kinks
// (e.g. |.| terms) are handled.
GridMin2d grid_min_2d(const std::function<double(double, double)>& f,
                      double x_lo, double x_hi, double y_lo, double y_hi,
                      int coarse_points, double window);

}  // namespace qsup

#endif  // QSUP_OPTIMIZE_HPP
