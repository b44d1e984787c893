#pragma once

#include "lefgamma/exceptional_sets.hpp"
#include "lefgamma/gamma.hpp"
#include "lefgamma/lefschetz.hpp"
#include "lefgamma/minuscule.hpp"
#include "lefgamma/variety.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace lefgamma {

using Json = nlohmann::json;

/// Arbitrary-precision values are serialized as decimal strings so that no
/// consumer silently loses precision; small structural fields (indices,
/// witnesses, ranks) stay plain JSON numbers.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j);

Json rational_json(const Rational& q);  // {"num": "...", "den": "..."}

/// Strict parse of the canonical product description
///   {"factors":[{"type":"I"|"II"|"III","e":int,"h":int,"n":int}, ...]}.
/// Unknown keys are rejected; type "IV" gets a dedicated error.
VarietyProduct variety_from_json(const Json& j);
Json variety_json(const VarietyProduct& v);

Json certificate_json(const MembershipCertificate& cert);
Json verdict_json(const LefschetzVerdict& verdict);
Json gamma_result_json(const GammaResult& result);
Json minuscule_entry_json(const MinusculeEntry& entry);
Json decomposition_json(const TensorDecomposition& decomp);

/// Canonical serialization: object keys sorted, no insignificant whitespace.
std::string canonical_dump(const Json& j);

}  // namespace lefgamma
