#include "factorcrit/campaign.hpp"

#include <algorithm>

#include "factorcrit/errors.hpp"
#include "factorcrit/random_graph.hpp"

namespace factorcrit {

using nlohmann::json;

namespace {

std::pair<std::int64_t, std::int64_t> int_range(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("campaign config: missing \"") + key + "\"");
  const json& v = j.at(key);
  if (v.is_number_integer()) return {v.get<std::int64_t>(), v.get<std::int64_t>()};
  if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer()) {
    auto lo = v[0].get<std::int64_t>();
    auto hi = v[1].get<std::int64_t>();
    if (lo > hi) throw InputError(std::string("campaign config: \"") + key + "\" range is empty");
    return {lo, hi};
  }
  throw InputError(std::string("campaign config: \"") + key +
                   "\" must be an integer or a [min, max] pair");
}

}  // namespace

CampaignConfig parse_campaign_config(const json& j) {
  if (!j.is_object()) throw InputError("campaign config must be a JSON object");
  static const std::vector<std::string> known{"theorems", "t", "k", "n", "samples", "seed", "surplus"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw InputError("campaign config: unknown key \"" + key + "\"");

  CampaignConfig c;
  if (j.contains("theorems")) {
    c.theorems.clear();
    if (!j["theorems"].is_array() || j["theorems"].empty())
      throw InputError("campaign config: \"theorems\" must be a nonempty array");
    for (const auto& th : j["theorems"]) {
      if (!th.is_string()) throw InputError("campaign config: theorem names must be strings");
      c.theorems.push_back(theorem_from_string(th.get<std::string>()));
    }
  }
  std::tie(c.t_min, c.t_max) = int_range(j, "t");
  std::tie(c.k_min, c.k_max) = int_range(j, "k");
  if (c.k_min < 1) throw InputError("campaign config: k must be at least 1");
  if (j.contains("n")) {
    if (j["n"].is_string()) {
      if (j["n"].get<std::string>() != "min")
        throw InputError("campaign config: \"n\" must be \"min\", an integer or a [min, max] pair");
    } else {
      c.n_range = int_range(j, "n");
    }
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_unsigned() || j["samples"].get<std::size_t>() == 0)
      throw InputError("campaign config: \"samples\" must be a positive integer");
    c.samples = j["samples"].get<std::size_t>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw InputError("campaign config: \"seed\" must be a nonnegative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("surplus")) {
    const json& s = j["surplus"];
    if (s.is_string() && s.get<std::string>() == "auto") {
      // default
    } else if (s.is_object() && s.contains("min") && s.contains("max") &&
               s["min"].is_number_integer() && s["max"].is_number_integer() &&
               s.size() == 2) {
      c.surplus = SurplusRange{s["min"].get<std::int64_t>(), s["max"].get<std::int64_t>()};
      if (c.surplus->min < 0 || c.surplus->min > c.surplus->max)
        throw InputError("campaign config: surplus range must satisfy 0 <= min <= max");
    } else {
      throw InputError("campaign config: \"surplus\" must be \"auto\" or {\"min\", \"max\"}");
    }
  }
  for (Theorem th : c.theorems)
    if (campaign_cells(c, th).empty())
      throw InputError(std::string("campaign config: grid has no valid cell for ") + to_string(th));
  return c;
}

json to_json(const CampaignConfig& c) {
  json j;
  j["theorems"] = json::array();
  for (Theorem th : c.theorems) j["theorems"].push_back(to_string(th));
  j["t"] = {c.t_min, c.t_max};
  j["k"] = {c.k_min, c.k_max};
  if (c.n_range)
    j["n"] = {c.n_range->first, c.n_range->second};
  else
    j["n"] = "min";
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  if (c.surplus)
    j["surplus"] = {{"min", c.surplus->min}, {"max", c.surplus->max}};
  else
    j["surplus"] = "auto";
  return j;
}

std::vector<ExtremalParams> campaign_cells(const CampaignConfig& c, Theorem theorem) {
  std::vector<ExtremalParams> cells;
  for (std::int64_t t = std::max<std::int64_t>(c.t_min, 1); t <= c.t_max; ++t) {
    for (std::int64_t k = std::max<std::int64_t>(c.k_min, 1); k <= std::min(c.k_max, t); ++k) {
      if (!c.n_range) {
        const auto n = theorem == Theorem::Edge ? min_order_edge(t, k) : min_order_spectral(t, k);
        cells.push_back({n, t, k});
        continue;
      }
      for (std::int64_t n = c.n_range->first; n <= c.n_range->second; ++n) {
        const ExtremalParams p{n, t, k};
        const bool bound = theorem == Theorem::Edge ? meets_edge_order_bound(p)
                                                    : meets_spectral_order_bound(p);
        if (bound && params_valid(p)) cells.push_back(p);
      }
    }
  }
  return cells;
}

SurplusRange effective_surplus(const CampaignConfig& c, const ExtremalParams& cell) {
  const auto n = static_cast<std::size_t>(cell.n);
  const auto backbone = static_cast<std::int64_t>(harary_backbone(n, cell.t).edge_count());
  const std::int64_t room = binomial2(cell.n) - backbone;
  SurplusRange r;
  if (c.surplus) {
    r = *c.surplus;
  } else {
    r.min = thm4_threshold(cell) - backbone - cell.n;
    r.max = room;
  }
  r.min = std::clamp<std::int64_t>(r.min, 0, room);
  r.max = std::clamp<std::int64_t>(r.max, r.min, room);
  return r;
}

std::uint64_t sample_seed(std::uint64_t master, const ExtremalParams& cell, std::size_t index) {
  return mix_seed({master, static_cast<std::uint64_t>(cell.t), static_cast<std::uint64_t>(cell.k),
                   static_cast<std::uint64_t>(cell.n), static_cast<std::uint64_t>(index)});
}

Sample draw_sample(const ExtremalParams& cell, const SurplusRange& range, std::uint64_t seed) {
  Rng rng(seed);
  const std::int64_t surplus = uniform_between(rng, range.min, range.max);
  return {surplus, random_t_connected(static_cast<std::size_t>(cell.n), cell.t,
                                      static_cast<std::size_t>(surplus), seed)};
}

std::size_t CampaignReport::count(Conclusion c) const {
  std::size_t total = 0;
  for (const auto& th : theorems)
    for (const auto& cell : th.cells)
      if (auto it = cell.counts.find(c); it != cell.counts.end()) total += it->second;
  return total;
}

CampaignReport search_counterexample(const CampaignConfig& c) {
  CampaignReport report;
  report.config = c;
  for (Theorem th : c.theorems) {
    TheoremCampaign campaign{th, {}};
    for (const auto& cell : campaign_cells(c, th)) {
      CellReport out;
      out.params = cell;
      out.surplus = effective_surplus(c, cell);
      for (Conclusion k : {Conclusion::Critical, Conclusion::ExtremalException, Conclusion::Violation,
                           Conclusion::HypothesesUnmet, Conclusion::Indeterminate})
        out.counts[k] = 0;
      for (std::size_t i = 0; i < c.samples; ++i) {
        const std::uint64_t seed = sample_seed(c.seed, cell, i);
        const auto sample = draw_sample(cell, out.surplus, seed);
        const auto verdict = th == Theorem::Edge ? verify_thm4(sample.graph, cell.t, cell.k)
                                                 : verify_thm5(sample.graph, cell.t, cell.k);
        ++out.counts[verdict.conclusion];
        if (verdict.conclusion != Conclusion::Critical &&
            verdict.conclusion != Conclusion::HypothesesUnmet)
          out.exceptions.push_back({seed, sample.surplus, verdict.conclusion});
      }
      campaign.cells.push_back(std::move(out));
    }
    report.theorems.push_back(std::move(campaign));
  }
  return report;
}

json to_json(const CampaignReport& r) {
  json j;
  j["config"] = to_json(r.config);
  j["violation"] = r.violation_found();
  j["reports"] = json::array();
  const json cfg = to_json(r.config);
  for (const auto& th : r.theorems) {
    json tj;
    tj["theorem"] = to_string(th.theorem);
    tj["grid"] = {{"t", cfg["t"]}, {"k", cfg["k"]}, {"n", cfg["n"]}};
    tj["cells"] = json::array();
    for (const auto& cell : th.cells) {
      json cj;
      cj["params"] = {{"n", cell.params.n}, {"t", cell.params.t}, {"k", cell.params.k}};
      cj["surplus"] = {{"min", cell.surplus.min}, {"max", cell.surplus.max}};
      cj["counts"] = json::object();
      for (const auto& [k, v] : cell.counts) cj["counts"][to_string(k)] = v;
      cj["seeds_of_exceptions"] = json::array();
      for (const auto& s : cell.exceptions)
        cj["seeds_of_exceptions"].push_back(
            {{"seed", s.seed}, {"surplus", s.surplus}, {"conclusion", to_string(s.conclusion)}});
      tj["cells"].push_back(std::move(cj));
    }
    j["reports"].push_back(std::move(tj));
  }
  return j;
}

}  // namespace factorcrit
