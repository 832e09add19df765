#pragma once

#include "nscurve/descent.hpp"
#include "nscurve/families.hpp"
#include "nscurve/invariants.hpp"
#include "nscurve/parse.hpp"

#include <json.hpp>

#include <string>

namespace nscurve {

// Key order is insertion order, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const SemigroupData& sg);
Json to_json(const InvariantsReport& r);
Json to_json(const FamilyMember& m);
Json to_json(const ProjMap& T);
Json to_json(const EquivalenceResult& e);
Json to_json(const MemberVerification& v);
Json to_json(const IdealPresentation& I);

// {family, t1, t2, a} or {family, A, B, C}; when both are present they
// must agree. Throws InvalidParameters or ParseError.
FamilyMember member_from_json(const Json& j, int max_level = kDefaultMaxLevel);

// One generator per nonempty line (or separated by ';'), with an optional
// leading `level m` line fixing the meaning of r.
IdealPresentation parse_ideal(const std::string& text, const ParseContext& ctx = {});

} // namespace nscurve
