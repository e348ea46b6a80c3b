#include "factorcrit/report_json.hpp"

#include "factorcrit/graph_io.hpp"

namespace factorcrit {

using nlohmann::json;

json to_json(const ExtremalParams& p) { return {{"n", p.n}, {"t", p.t}, {"k", p.k}}; }

json to_json(const CriticalityVerdict& v) {
  json j{{"is_critical", v.is_critical},
         {"reason", to_string(v.reason)},
         {"subsets_checked", v.subsets_checked}};
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const Matching& m) {
  json pairs = json::array();
  for (auto [u, v] : m.pairs) pairs.push_back({u, v});
  return {{"size", m.size()}, {"pairs", pairs}};
}

json to_json(const ConnectivityResult& r) {
  json j{{"kappa", r.kappa}};
  j["separator"] = r.separator ? json(*r.separator) : json(nullptr);
  return j;
}

json to_json(const ClosureTrace& t) {
  json added = json::array();
  for (const auto& s : t.added)
    added.push_back({{"u", s.u}, {"v", s.v}, {"du", s.degree_u}, {"dv", s.degree_v}});
  return {{"l", t.l}, {"added", added}};
}

json to_json(const SpectralEstimate& s) {
  return {{"rho", s.rho}, {"residual", s.residual}, {"iterations", s.iterations}};
}

json to_json(const CliqueResult& c) { return {{"size", c.omega}, {"witness", c.witness}}; }

json to_json(const Lemma8Report& r) {
  json j{{"status", to_string(r.status)},
         {"edges", r.edges},
         {"threshold", r.threshold},
         {"required_omega", r.required_omega}};
  j["unmet"] = r.unmet.empty() ? json(nullptr) : json(r.unmet);
  j["omega"] = r.omega ? json(*r.omega) : json(nullptr);
  return j;
}

json to_json(const EquivalenceReport& r) {
  return {{"k", r.k},
          {"l", r.l},
          {"closure", serialize_graph6(r.closure)},
          {"edges_added", r.edges_added},
          {"original", to_json(r.original)},
          {"closed", to_json(r.closed)},
          {"equivalent", r.equivalent}};
}

json to_json(const TheoremReport& r) {
  json j;
  j["theorem"] = to_string(r.theorem);
  j["params"] = to_json(r.params);
  j["hypotheses"] = json::array();
  for (const auto& h : r.hypotheses)
    j["hypotheses"].push_back({{"name", h.name}, {"status", to_string(h.status)}, {"values", h.values}});
  j["conclusion"] = to_string(r.conclusion);
  json d = json::object();
  if (r.criticality) d["criticality"] = to_json(*r.criticality);
  if (r.extremal) d["extremal"] = *r.extremal;
  if (r.closure_edges_added) d["closure_edges_added"] = *r.closure_edges_added;
  if (r.spectral) d["spectral"] = to_json(*r.spectral);
  if (r.spectral_threshold) d["spectral_threshold"] = *r.spectral_threshold;
  j["details"] = d;
  return j;
}

}  // namespace factorcrit
