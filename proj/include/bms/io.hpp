#pragma once

#include "bms/characters.hpp"

#include <string>

#include "json.hpp"

namespace bms {

// Canonical text forms. Scalars render as integer-coefficient num/den in the
// monomial order; parseScalar accepts the same grammar (full +,-,*,/,^
// arithmetic over cL, cM, hL, hM and integer literals).
Scalar parseScalar(const std::string& text);
mpq_class parseRational(const std::string& text);  // accepts "a" or "a/b"

std::string toText(const ModuleVector& v);
std::string toText(const QSeries& s);

nlohmann::json toJson(const ModuleVector& v);
ModuleVector vectorFromJson(const nlohmann::json& j);
nlohmann::json toJson(const QSeries& s);
QSeries seriesFromJson(const nlohmann::json& j);

}  // namespace bms
