#include "factorcrit/verify.hpp"

#include "factorcrit/closure.hpp"
#include "factorcrit/connectivity.hpp"
#include "factorcrit/errors.hpp"
#include "factorcrit/invariants.hpp"

namespace factorcrit {

using nlohmann::json;

const char* to_string(Theorem t) { return t == Theorem::Edge ? "thm4" : "thm5"; }

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::Critical: return "CRITICAL";
    case Conclusion::ExtremalException: return "EXTREMAL_EXCEPTION";
    case Conclusion::Violation: return "VIOLATION";
    case Conclusion::HypothesesUnmet: return "HYPOTHESES_UNMET";
    case Conclusion::Indeterminate: return "INDETERMINATE";
  }
  return "UNKNOWN";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

Theorem theorem_from_string(const std::string& s) {
  if (s == "thm4") return Theorem::Edge;
  if (s == "thm5") return Theorem::Spectral;
  throw InputError("unknown theorem \"" + s + "\" (expected thm4 or thm5)");
}

const HypothesisCheck& TheoremReport::hypothesis(const std::string& name) const {
  for (const auto& h : hypotheses)
    if (h.name == name) return h;
  throw InputError("no hypothesis named " + name);
}

bool TheoremReport::all_hypotheses_pass() const {
  for (const auto& h : hypotheses)
    if (h.status != CheckStatus::Pass) return false;
  return true;
}

namespace {

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

// Hypotheses shared by both theorems.
void common_checks(TheoremReport& r, const Graph& g) {
  const auto& p = r.params;
  r.hypotheses.push_back({"parameters", pass_if(p.t >= p.k && p.k >= 1), json{{"t", p.t}, {"k", p.k}}});

  std::int64_t kappa = 0;
  if (g.order() > 0) kappa = static_cast<std::int64_t>(vertex_connectivity(g).kappa);
  const bool connected_enough = p.n > p.t && kappa >= p.t;
  r.hypotheses.push_back({"connectivity", pass_if(connected_enough),
                          json{{"kappa", kappa}, {"t", p.t}, {"n", p.n}}});
}

void parity_check(TheoremReport& r) {
  const auto& p = r.params;
  r.hypotheses.push_back({"parity", pass_if((p.n - p.k) % 2 == 0), json{{"n", p.n}, {"k", p.k}}});
}

// Criticality verdict, then the exceptional-graph test on `candidate`.
void classify(TheoremReport& r, const Graph& g, const Graph& candidate) {
  r.criticality = is_k_factor_critical(g, r.params.k);
  if (r.criticality->is_critical) {
    r.conclusion = Conclusion::Critical;
    return;
  }
  r.extremal = is_extremal(candidate, r.params);
  r.conclusion = *r.extremal ? Conclusion::ExtremalException : Conclusion::Violation;
}

}  // namespace

TheoremReport verify_thm4(const Graph& g, std::int64_t t, std::int64_t k) {
  TheoremReport r;
  r.theorem = Theorem::Edge;
  r.params = {static_cast<std::int64_t>(g.order()), t, k};
  const auto& p = r.params;

  common_checks(r, g);
  r.hypotheses.push_back({"order_bound", pass_if(meets_edge_order_bound(p)),
                          json{{"two_n", 2 * p.n}, {"required", 15 * p.t - 11 * p.k + 29}}});
  parity_check(r);
  const auto edges = static_cast<std::int64_t>(g.edge_count());
  const auto threshold = thm4_threshold(p);
  r.hypotheses.push_back({"edge_threshold", pass_if(edges > threshold),
                          json{{"edges", edges}, {"threshold", threshold}}});

  if (!r.all_hypotheses_pass()) {
    r.conclusion = Conclusion::HypothesesUnmet;
    return r;
  }
  r.criticality = is_k_factor_critical(g, k);
  if (r.criticality->is_critical) {
    r.conclusion = Conclusion::Critical;
    return r;
  }
  auto closed = l_closure(g, p.n + p.k - 1);
  r.closure_edges_added = closed.trace.added.size();
  r.extremal = is_extremal(closed.graph, p);
  r.conclusion = *r.extremal ? Conclusion::ExtremalException : Conclusion::Violation;
  return r;
}

TheoremReport verify_thm5(const Graph& g, std::int64_t t, std::int64_t k, double tol, double slack) {
  TheoremReport r;
  r.theorem = Theorem::Spectral;
  r.params = {static_cast<std::int64_t>(g.order()), t, k};
  const auto& p = r.params;

  common_checks(r, g);
  r.hypotheses.push_back({"order_bound", pass_if(meets_spectral_order_bound(p)),
                          json{{"two_n", 2 * p.n},
                               {"required_edge", 15 * p.t - 11 * p.k + 29},
                               {"required_spectral", 2 * p.t * p.t + 5 * p.t + 4}}});
  parity_check(r);

  HypothesisCheck spectral{"spectral_threshold", CheckStatus::Fail, json::object()};
  spectral.values["slack"] = slack;
  if (g.order() == 0 || !is_connected(g)) {
    spectral.values["evaluated"] = false;
    spectral.values["reason"] = "graph is disconnected";
  } else if (!params_valid(p)) {
    spectral.values["evaluated"] = false;
    spectral.values["reason"] = params_violation(p);
  } else {
    spectral.values["evaluated"] = true;
    r.spectral_threshold = extremal_quotient_rho(p);
    spectral.values["threshold"] = *r.spectral_threshold;
    try {
      r.spectral = spectral_radius(g, tol);
    } catch (const SpectralConvergenceError& e) {
      r.spectral = e.best();
      spectral.values["converged"] = false;
    }
    spectral.values["rho"] = r.spectral->rho;
    spectral.values["residual"] = r.spectral->residual;
    spectral.values["iterations"] = r.spectral->iterations;
    if (!spectral.values.contains("converged")) {
      spectral.values["converged"] = true;
      const auto verdict = compare_with_slack(r.spectral->rho, *r.spectral_threshold, slack);
      spectral.values["verdict"] = to_string(verdict);
      spectral.status = verdict == ThresholdVerdict::Above ? CheckStatus::Pass
                        : verdict == ThresholdVerdict::Below ? CheckStatus::Fail
                                                             : CheckStatus::Indeterminate;
    } else {
      spectral.status = CheckStatus::Indeterminate;
    }
  }
  r.hypotheses.push_back(std::move(spectral));

  bool any_fail = false;
  bool any_indeterminate = false;
  for (const auto& h : r.hypotheses) {
    any_fail |= h.status == CheckStatus::Fail;
    any_indeterminate |= h.status == CheckStatus::Indeterminate;
  }
  if (any_fail) {
    r.conclusion = Conclusion::HypothesesUnmet;
    return r;
  }
  classify(r, g, g);
  if (any_indeterminate && r.conclusion == Conclusion::Violation)
    r.conclusion = Conclusion::Indeterminate;
  return r;
}

}  // namespace factorcrit
