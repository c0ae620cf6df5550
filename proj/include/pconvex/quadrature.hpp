#pragma once

#include <functional>
#include <vector>

namespace pconvex {

struct QuadTable {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;  // sum to 2
};

/// Gauss-Legendre nodes/weights of the given order (Newton on P_n); cached.
const QuadTable& gauss_legendre(int order);

/// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Subdivides until the local
/// error estimate is below max(abs_tol, rel_tol * |integral|) scaled by the
/// interval fraction. Handles integrands with jumps and kinks.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-9, double abs_tol = 1e-300);

/// Fixed composite Gauss-Legendre rule: `panels` panels of the given order.
double integrate_gl_composite(const std::function<double(double)>& f, double a, double b,
                              int panels, int order);

}  // namespace pconvex
