#pragma once

// One-dimensional golden-section minimisation and bisection root finding.

#include <cmath>
#include <optional>

namespace vdw {

struct ScalarMinimum {
  double x;
  double value;
};

// Minimises a unimodal f on [a, b] until the bracket is narrower than tol.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double a, double b, double tol,
                                      int max_iterations = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iterations && (b - a) > tol; ++it) {
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
  return fc < fd ? ScalarMinimum{c, fc} : ScalarMinimum{d, fd};
}

// Root of f in [a, b] by bisection to an interval width of tol. Returns
// nullopt if f(a) and f(b) do not have opposite signs (an exact zero at an
// end point counts as a root).
template <class F>
std::optional<double> bisect_root(F&& f, double a, double b, double tol,
                                  int max_iterations = 200) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!(fa * fb < 0.0)) return std::nullopt;
  for (int it = 0; it < max_iterations && (b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace vdw
