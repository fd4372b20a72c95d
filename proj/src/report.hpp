#pragma once

#include <json.hpp>
#include <string>

#include "coframe.hpp"
#include "curvature.hpp"
#include "verify.hpp"

namespace su2curv {

enum class Command { kValidate, kTorsion, kClassify, kCurvature, kVerify };

Command command_from_string(const std::string& s);  // throws ParseError on junk

// Machine report; exact rationals are serialized as strings ("p/q"), forms in
// the structure-file term notation. Sections accumulate: validate < torsion <
// classify < curvature < verify.
nlohmann::json build_report(const std::string& name, const Coframe5& cf, Command cmd);

std::string human_report(const nlohmann::json& report);

// True when the report signals no failures (Jacobi holds, and when present,
// every verification check passed).
bool report_clean(const nlohmann::json& report);

// Dotted-path lookup used by expectation checking; numeric components index
// arrays (0-based). Returns the serialized value, or throws ParseError.
std::string report_value_at(const nlohmann::json& report, const std::string& key);

}  // namespace su2curv
