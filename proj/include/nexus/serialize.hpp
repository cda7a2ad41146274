#pragma once

#include "nexus/arrangements.hpp"
#include "nexus/le_numbers.hpp"
#include "nexus/monodromy.hpp"

#include "json.hpp"

#include <string>

namespace nexus {

using json = nlohmann::json;

// CycloProduct: written as its text form; read from text or {"k": exponent}.
void to_json(json& j, const CycloProduct& p);
void from_json(const json& j, CycloProduct& p);

void to_json(json& j, const IntMatrix& m);
void from_json(const json& j, IntMatrix& m);

// Component keys: k, mu, d, charH, tau, fixedRank.
void to_json(json& j, const ComponentData& c);
void from_json(const json& j, ComponentData& c);

// Setup keys: n, mu0, d0, charH0, components, lambda0, omega.
void to_json(json& j, const SingularSetup& s);
void from_json(const json& j, SingularSetup& s);

// Finite colengths are integers, infinite ones the string "INFINITE".
void to_json(json& j, const Colength& c);
void from_json(const json& j, Colength& c);

void to_json(json& j, const LeInvariants& le);
void from_json(const json& j, LeInvariants& le);

void to_json(json& j, const Finding& f);
void from_json(const json& j, Finding& f);
void to_json(json& j, const ExponentCeiling& e);
void from_json(const json& j, ExponentCeiling& e);
void to_json(json& j, const ConstraintReport& r);
void from_json(const json& j, ConstraintReport& r);

void to_json(json& j, const MultiplePoint& p);

/// Rational from a JSON integer or a string such as "-3/4".
mpq_class rationalFromJson(const json& j);
json rationalToJson(const mpq_class& q);

/// Normals from {"normals": [[a, b, c], ...]}.
CentralArrangement3 arrangementFromJson(const json& j);

std::string renderText(const LeInvariants& le);
std::string renderText(const ConstraintReport& r);

}  // namespace nexus
