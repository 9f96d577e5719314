#pragma once

#include <string>

#include "json.hpp"
#include "popov/verify.hpp"

namespace popov {

using Json = nlohmann::ordered_json;

// Numbers outside the 53-bit safe range become strings.
Json int_json(const Int& v);

Json pair_json(const PopovPair& pair);
Json fan_json(const ColoredFan& fan);
Json poset_json(const OrbitPoset& poset);
Json ideal_json(const CompiledIdeal& ideal, const Lattice& lat);
Json verify_json(const VerifyReport& report);

// Notice-only report for p = q.
Json classification_json(const PopovPair& pair);
Json analysis_json(const PairAnalysis& analysis, const VerifyReport& report);

std::string analysis_text(const PairAnalysis& analysis, const VerifyReport& report);
std::string verify_text(const PairAnalysis& analysis, const VerifyReport& report);

}  // namespace popov
