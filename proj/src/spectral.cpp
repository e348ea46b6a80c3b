#include "factorcrit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "factorcrit/errors.hpp"

namespace factorcrit {

namespace {

// y = A x.
void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (Vertex u = 0; u < g.order(); ++u) {
    double s = 0.0;
    for_each_bit(g.row(u), [&](Vertex v) { s += x[v]; });
    y[u] = s;
  }
}

double inf_norm(const std::vector<double>& x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

SpectralEstimate spectral_radius(const Graph& g, PowerIterationOptions options) {
  const std::size_t n = g.order();
  if (!(options.tol > 0.0)) throw InputError("tolerance must be positive");
  if (n == 0 || !is_connected(g)) throw InputError("spectral radius requires a connected graph");
  if (n == 1) return {0.0, 0.0, 0};

  const std::size_t budget = options.max_iterations != 0 ? options.max_iterations : 100 * n + 1000;
  std::vector<double> x(n, 1.0);
  std::vector<double> ax(n);
  SpectralEstimate est;
  for (std::size_t it = 1; it <= budget; ++it) {
    multiply(g, x, ax);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += x[i] * ax[i];
      den += x[i] * x[i];
    }
    const double rho = num / den;
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(ax[i] - rho * x[i]));
    est = {rho, r / inf_norm(x), it};
    if (est.residual <= options.tol) return est;

    // Shifted step: x <- (A + I) x, renormalised in the infinity norm.
    for (std::size_t i = 0; i < n; ++i) ax[i] += x[i];
    const double scale = inf_norm(ax);
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / scale;
  }
  throw SpectralConvergenceError(
      "power iteration did not reach residual " + std::to_string(options.tol) + " in " +
          std::to_string(budget) + " iterations",
      est);
}

SpectralEstimate spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, PowerIterationOptions{tol, 0});
}

std::array<double, 3> extremal_quotient_cubic(const ExtremalParams& p) {
  validate(p);
  const auto t = static_cast<double>(p.t);
  const auto m = static_cast<double>(p.middle_size());
  const auto s = static_cast<double>(p.independent_size());
  // Q = [[t-1, m, s], [t, m-1, 0], [t, 0, 0]];
  // det(xI - Q) = x^3 - tr(Q) x^2 + (sum of principal 2x2 minors) x - det(Q).
  const double trace = (t - 1) + (m - 1);
  const double minors = ((t - 1) * (m - 1) - m * t) + (-s * t) + 0.0;
  const double det = -s * t * (m - 1);
  return {-trace, minors, -det};
}

double extremal_quotient_rho(const ExtremalParams& p) {
  const auto c = extremal_quotient_cubic(p);
  auto poly = [&](double x) { return ((x + c[0]) * x + c[1]) * x + c[2]; };
  double lo = static_cast<double>(p.n + p.k - p.t - 2);
  double hi = static_cast<double>(p.n - 1);
  if (!(poly(lo) < 0.0 && poly(hi) > 0.0))
    throw std::logic_error("quotient cubic does not change sign on [n+k-t-2, n-1]");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (poly(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double hong_bound(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) throw InputError("Hong's bound requires a connected graph");
  return std::sqrt(2.0 * static_cast<double>(g.edge_count()) -
                   static_cast<double>(g.order()) + 1.0);
}

bool check_spectral_monotonicity(const Graph& sub, const Graph& super, double slack) {
  if (!is_spanning_subgraph(sub, super)) throw InputError("first graph is not a spanning subgraph of the second");
  if (!is_connected(sub) || !is_connected(super)) throw InputError("both graphs must be connected");
  return spectral_radius(sub).rho <= spectral_radius(super).rho + slack;
}

const char* to_string(ThresholdVerdict v) {
  switch (v) {
    case ThresholdVerdict::Above: return "above";
    case ThresholdVerdict::Below: return "below";
    case ThresholdVerdict::WithinSlack: return "within-slack";
  }
  return "unknown";
}

ThresholdVerdict compare_with_slack(double value, double threshold, double slack) {
  if (value > threshold + slack) return ThresholdVerdict::Above;
  if (value < threshold - slack) return ThresholdVerdict::Below;
  return ThresholdVerdict::WithinSlack;
}

}  // namespace factorcrit
