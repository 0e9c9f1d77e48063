#pragma once

#include "cell24/covers.hpp"
#include "cell24/cusps.hpp"
#include "cell24/homology.hpp"
#include "cell24/pairing.hpp"

#include <json.hpp>

#include <string>

namespace cell24 {

using Json = nlohmann::ordered_json;

inline const char* kToolVersion = "1.0.0";

/// 64-bit FNV-1a of the raw bytes, as a fixed-width hex string. Used as the
/// input digest of report envelopes (content fingerprint, not cryptographic).
std::string content_digest(const std::string& bytes);

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json verification_json(const VerificationReport& rep);
Json census_json(const std::vector<CensusEntry>& census);
std::vector<CensusEntry> census_from_json(const Json& j);
Json homology_json(const HomologyProfile& prof);
HomologyProfile homology_from_json(const Json& j);
Json geography_json(const GeographyReport& rep);
GeographyReport geography_from_json(const Json& j);

/// {command, input_digest, tool_version, payload} with canonical key order.
Json envelope(const std::string& command, const std::string& input_bytes, Json payload);

} // namespace cell24
