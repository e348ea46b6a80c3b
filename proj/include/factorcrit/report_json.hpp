#pragma once

#include <json.hpp>

#include "factorcrit/closure.hpp"
#include "factorcrit/connectivity.hpp"
#include "factorcrit/invariants.hpp"
#include "factorcrit/matching.hpp"
#include "factorcrit/spectral.hpp"
#include "factorcrit/verify.hpp"

namespace factorcrit {

nlohmann::json to_json(const ExtremalParams& p);
nlohmann::json to_json(const CriticalityVerdict& v);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const ConnectivityResult& r);
nlohmann::json to_json(const ClosureTrace& t);
nlohmann::json to_json(const SpectralEstimate& s);
nlohmann::json to_json(const CliqueResult& c);
nlohmann::json to_json(const Lemma8Report& r);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const TheoremReport& r);

}  // namespace factorcrit
