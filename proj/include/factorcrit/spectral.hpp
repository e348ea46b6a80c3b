#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

#include "factorcrit/extremal.hpp"
#include "factorcrit/graph.hpp"

namespace factorcrit {

struct SpectralEstimate {
  double rho = 0.0;
  /// ||A x - rho x||_inf / ||x||_inf at the returned iterate.
  double residual = 0.0;
  std::size_t iterations = 0;
};

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr double kThresholdSlack = 1e-9;

/// Thrown when power iteration exhausts its budget; best() is the last iterate.
class SpectralConvergenceError : public std::runtime_error {
 public:
  SpectralConvergenceError(const std::string& what, SpectralEstimate best)
      : std::runtime_error(what), best_(best) {}
  const SpectralEstimate& best() const noexcept { return best_; }

 private:
  SpectralEstimate best_;
};

struct PowerIterationOptions {
  double tol = kDefaultSpectralTol;
  /// 0 selects the default budget 100 n + 1000.
  std::size_t max_iterations = 0;
};

/// Adjacency spectral radius by power iteration on A + I from the all-ones
/// vector, stopped on the eigen-equation residual. Throws InputError for
/// disconnected graphs or tol <= 0, SpectralConvergenceError on budget
/// exhaustion.
SpectralEstimate spectral_radius(const Graph& g, PowerIterationOptions options = {});
SpectralEstimate spectral_radius(const Graph& g, double tol);

/// Characteristic polynomial x^3 + c[0] x^2 + c[1] x + c[2] of the
/// equitable-partition quotient matrix of construct_extremal(p), parts
/// ordered hub, middle clique, independent part.
std::array<double, 3> extremal_quotient_cubic(const ExtremalParams& p);

/// Largest root of the quotient cubic, by bisection on [n+k-t-2, n-1] down
/// to a bracket width of 1e-12. Throws InputError on invalid params.
double extremal_quotient_rho(const ExtremalParams& p);

/// sqrt(2 e(G) - n + 1). Throws InputError for disconnected graphs.
double hong_bound(const Graph& g);

/// rho(sub) <= rho(super) + slack. Throws InputError unless sub is a spanning
/// subgraph of super and both are connected.
bool check_spectral_monotonicity(const Graph& sub, const Graph& super,
                                 double slack = kThresholdSlack);

enum class ThresholdVerdict { Above, Below, WithinSlack };

const char* to_string(ThresholdVerdict v);

/// Above if value > threshold + slack, Below if value < threshold - slack.
ThresholdVerdict compare_with_slack(double value, double threshold,
                                    double slack = kThresholdSlack);

}  // namespace factorcrit
