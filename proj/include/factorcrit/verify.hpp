#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "factorcrit/extremal.hpp"
#include "factorcrit/graph.hpp"
#include "factorcrit/matching.hpp"
#include "factorcrit/spectral.hpp"

namespace factorcrit {

enum class Theorem { Edge, Spectral };

/// The three outcomes of the theorems plus two bookkeeping states:
/// HypothesesUnmet (theorem does not apply) and Indeterminate (a spectral
/// comparison fell inside the slack band or did not converge).
enum class Conclusion { Critical, ExtremalException, Violation, HypothesesUnmet, Indeterminate };

enum class CheckStatus { Pass, Fail, Indeterminate };

const char* to_string(Theorem t);
const char* to_string(Conclusion c);
const char* to_string(CheckStatus s);
Theorem theorem_from_string(const std::string& s);

struct HypothesisCheck {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  nlohmann::json values;
};

struct TheoremReport {
  Theorem theorem = Theorem::Edge;
  ExtremalParams params;
  std::vector<HypothesisCheck> hypotheses;
  Conclusion conclusion = Conclusion::HypothesesUnmet;

  std::optional<CriticalityVerdict> criticality;
  /// Edge theorem: recognition ran on the (n+k-1)-closure; spectral theorem:
  /// on G itself.
  std::optional<bool> extremal;
  std::optional<std::size_t> closure_edges_added;
  std::optional<SpectralEstimate> spectral;
  std::optional<double> spectral_threshold;

  const HypothesisCheck& hypothesis(const std::string& name) const;
  bool all_hypotheses_pass() const;
};

/// Checks t >= k >= 1, t-connectivity, 2n >= 15t-11k+29, parity and
/// e(G) > C(n+k-t-2,2) + (t-k+2)(t+1). When all hold, decides
/// k-factor-criticality and, failing that, whether the (n+k-1)-closure is the
/// extremal graph.
TheoremReport verify_thm4(const Graph& g, std::int64_t t, std::int64_t k);

/// Same hypotheses with the extra order bound 2n >= 2t^2+5t+4 and
/// rho(G) >= rho(extremal) in place of the edge count; the exception is
/// tested on G itself.
TheoremReport verify_thm5(const Graph& g, std::int64_t t, std::int64_t k,
                          double tol = kDefaultSpectralTol, double slack = kThresholdSlack);

}  // namespace factorcrit
