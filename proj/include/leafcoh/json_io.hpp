#pragma once

#include <string>

#include <json.hpp>

#include "leafcoh/blocksolve.hpp"
#include "leafcoh/cohomology.hpp"
#include "leafcoh/sobolev.hpp"

namespace leafcoh {

/// Coefficient arrays: [{"twice_m": int, "re": number, "im": number}, ...],
/// sorted by weight, zero coefficients omitted.
nlohmann::json coeffs_to_json(const CoeffSeq& v);
/// Strict reader; unknown keys and weights outside 𝕄 raise ParseError.
CoeffSeq coeffs_from_json(const nlohmann::json& array, const ReprClass& cls);
CoeffSeq read_coeff_file(const std::string& path, const ReprClass& cls);

nlohmann::json to_json(const ReprClass& cls);
nlohmann::json to_json(const PreimageResult& r);
nlohmann::json to_json(const SurjectivityReport& r);
nlohmann::json to_json(const H3Report& r);
nlohmann::json to_json(const DeltaReport& r);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const LesResult& r);

}  // namespace leafcoh
