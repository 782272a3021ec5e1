#pragma once

#include <cstddef>
#include <functional>

namespace ellperim {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  std::size_t max_panels = 4096;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive Gauss-Kronrod 7/15: the panel with the largest error
/// estimate is bisected until the summed estimate drops below abs_tol.
/// Throws Error(Tolerance) when the panel budget runs out first.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                    double hi, const QuadratureOptions& opts = {});

}  // namespace ellperim
