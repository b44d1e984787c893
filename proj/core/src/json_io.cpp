#include "lefgamma/json_io.hpp"

#include <stdexcept>

namespace lefgamma {

Json integer_json(const Integer& x) { return x.str(); }

Integer integer_from_json(const Json& j) {
  if (j.is_string()) {
    return Integer(j.get<std::string>());
  }
  if (j.is_number_unsigned()) {
    return Integer(j.get<std::uint64_t>());
  }
  if (j.is_number_integer()) {
    return Integer(j.get<std::int64_t>());
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

Json rational_json(const Rational& q) {
  return Json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

namespace {

unsigned positive_field(const Json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw std::invalid_argument(std::string("missing key: ") + key);
  }
  const Json& j = obj.at(key);
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0 ||
      j.get<std::uint64_t>() > std::numeric_limits<unsigned>::max()) {
    throw std::invalid_argument(std::string(key) + " must be a positive integer");
  }
  return j.get<unsigned>();
}

AlbertType albert_from_string(const std::string& s) {
  if (s == "I") return AlbertType::I;
  if (s == "II") return AlbertType::II;
  if (s == "III") return AlbertType::III;
  if (s == "IV") {
    throw std::invalid_argument("type IV is out of scope");
  }
  throw std::invalid_argument("unknown Albert type: " + s);
}

}  // namespace

VarietyProduct variety_from_json(const Json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("variety description must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key != "factors") {
      throw std::invalid_argument("unknown key: " + key);
    }
  }
  if (!j.contains("factors") || !j.at("factors").is_array() || j.at("factors").empty()) {
    throw std::invalid_argument("factors must be a nonempty array");
  }
  std::vector<SimpleFactor> factors;
  for (const Json& item : j.at("factors")) {
    if (!item.is_object()) {
      throw std::invalid_argument("each factor must be a JSON object");
    }
    for (const auto& [key, value] : item.items()) {
      if (key != "type" && key != "e" && key != "h" && key != "n") {
        throw std::invalid_argument("unknown key: " + key);
      }
    }
    if (!item.contains("type") || !item.at("type").is_string()) {
      throw std::invalid_argument("factor type must be a string");
    }
    factors.emplace_back(albert_from_string(item.at("type").get<std::string>()),
                         positive_field(item, "e"), positive_field(item, "h"),
                         positive_field(item, "n"));
  }
  return VarietyProduct(std::move(factors));
}

Json variety_json(const VarietyProduct& v) {
  Json factors = Json::array();
  for (const SimpleFactor& f : v.factors) {
    factors.push_back(
        Json{{"type", albert_name(f.albert)}, {"e", f.e}, {"h", f.h}, {"n", f.n}});
  }
  return Json{{"factors", factors}};
}

Json certificate_json(const MembershipCertificate& cert) {
  Json witnesses = Json::object();
  for (const auto& [key, value] : cert.witnesses) {
    witnesses[key] = integer_json(value);
  }
  return Json{{"set", set_tag_name(cert.set)},
              {"family", cert.family},
              {"formula", family_formula(cert.set, cert.family)},
              {"witnesses", witnesses},
              {"value", integer_json(cert.value)}};
}

Json verdict_json(const LefschetzVerdict& verdict) {
  Json out{{"status", verdict_status_name(verdict.status)}, {"reasons", verdict.reasons}};
  if (verdict.criterion) {
    out["criterion"] = "clause-" + std::to_string(*verdict.criterion);
  }
  Json certs = Json::array();
  for (const auto& cert : verdict.certificates) {
    certs.push_back(certificate_json(cert));
  }
  out["certificates"] = certs;
  return out;
}

Json gamma_result_json(const GammaResult& result) {
  Json out{{"gamma", rational_json(result.value)}, {"argmax", result.argmax}};
  if (!result.audit.empty()) {
    Json audit = Json::array();
    for (const SubsetFraction& sf : result.audit) {
      audit.push_back(Json{{"subset", sf.subset}, {"value", rational_json(sf.value)}});
    }
    out["audit"] = audit;
  }
  return out;
}

Json minuscule_entry_json(const MinusculeEntry& entry) {
  std::string weight;
  switch (entry.weight.kind) {
    case WeightKind::fundamental:
      weight = "omega_" + std::to_string(entry.weight.r);
      break;
    case WeightKind::vector:
      weight = "omega_1";
      break;
    case WeightKind::spin:
      weight = "spin";
      break;
  }
  return Json{{"type", root_system_name(entry.type)},
              {"rank", entry.rank},
              {"weight", weight},
              {"dimension", integer_json(entry.dimension)},
              {"duality", entry.duality}};
}

Json decomposition_json(const TensorDecomposition& decomp) {
  return Json{{"entry", minuscule_entry_json(decomp.entry)},
              {"s", decomp.s},
              {"total_dimension", integer_json(decomp.total_dimension)}};
}

std::string canonical_dump(const Json& j) { return j.dump(); }

}  // namespace lefgamma
