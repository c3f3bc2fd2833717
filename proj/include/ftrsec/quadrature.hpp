// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace ftrsec {

struct QuadratureOptions {
  /// Stop refining once the error estimate is below rel_tol * |integral|.
  double rel_tol = 1e-10;
  unsigned max_depth = 20;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = true;
};

/// Adaptive Gauss-Kronrod on [a, b]; b may be +infinity, in which case the
/// half line is mapped onto a finite interval by t = u / (1 - u).
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opts = {});

/// Integral over [0, inf) for integrands whose mass sits near `scale`.
/// The half line is split at scale * {1, 4, 16, 64} so each panel sees a
/// smooth, well-resolved piece before the mapped tail.
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double scale,
                                     const QuadratureOptions& opts = {});

}  // namespace ftrsec
