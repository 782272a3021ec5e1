#include "ellperim/quadrature.hpp"

#include "ellperim/error.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace ellperim {

namespace {

// Kronrod abscissae; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * pair;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  // Bare |K - G| is pessimistic for analytic integrands but never optimistic
  // at the resolutions we use; add a roundoff floor.
  const double err = std::abs(kronrod - gauss) + 50.0 * 2.2e-16 * std::abs(kronrod);
  return {lo, hi, kronrod, err};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                    double hi, const QuadratureOptions& opts) {
  if (!(opts.abs_tol > 0.0))
    throw Error(ErrorCode::InvalidArgument, "quadrature tolerance must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw Error(ErrorCode::InvalidArgument, "quadrature bounds must be finite");

  std::priority_queue<Panel> panels;
  const Panel first = gauss_kronrod(f, lo, hi);
  panels.push(first);
  double value = first.value;
  double error = first.error;

  while (error > opts.abs_tol) {
    if (panels.size() >= opts.max_panels)
      throw Error(ErrorCode::Tolerance, "quadrature panel budget exhausted before reaching tolerance");
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel left = gauss_kronrod(f, worst.lo, mid);
    const Panel right = gauss_kronrod(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum to shed the drift from incremental updates.
  QuadratureResult out;
  out.panels = panels.size();
  while (!panels.empty()) {
    out.value += panels.top().value;
    out.error_estimate += panels.top().error;
    panels.pop();
  }
  return out;
}

}  // namespace ellperim
