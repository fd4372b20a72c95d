#include "report.hpp"

#include <sstream>

#include "catalog.hpp"
#include "parse.hpp"
#include "torsion.hpp"

namespace su2curv {

Command command_from_string(const std::string& s) {
  if (s == "validate") return Command::kValidate;
  if (s == "torsion") return Command::kTorsion;
  if (s == "classify") return Command::kClassify;
  if (s == "curvature") return Command::kCurvature;
  if (s == "verify") return Command::kVerify;
  throw ParseError("unknown command '" + s + "'");
}

namespace {

nlohmann::json ric_json(const SymTensor& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 1; i <= kDim; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= kDim; ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

nlohmann::json build_report(const std::string& name, const Coframe5& cf, Command cmd) {
  nlohmann::json out;
  out["name"] = name;
  for (int i = 1; i <= kDim; ++i)
    out["structure"]["d" + std::to_string(i)] = cf.d_basis(i).str();
  out["jacobi"] = !cf.validate_jacobi().has_value();
  const Su2& s = Su2::standard();
  out["adapted"] = s.validate_adapted(s.alpha(), s.omega(1), s.omega(2), s.omega(3)).ok;
  if (!out["jacobi"].get<bool>() || cmd == Command::kValidate) return out;

  TorsionForms t = extract_torsion(cf);
  {
    nlohmann::json tj;
    nlohmann::json nu = nlohmann::json::array(), sigma = nlohmann::json::array(),
                   phi = nlohmann::json::array(), f = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) nu.push_back(t.nu[i].str());
    for (int i = 0; i < 4; ++i) sigma.push_back(t.sigma[i].str());
    for (int i = 0; i < 3; ++i) phi.push_back(t.phi[i].str());
    for (int r = 0; r < 3; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < 3; ++j) row.push_back(t.f[r][j].str());
      f.push_back(row);
    }
    tj["nu"] = nu;
    tj["sigma"] = sigma;
    tj["phi"] = phi;
    tj["f"] = f;
    out["torsion"] = tj;
  }
  if (cmd == Command::kTorsion) return out;

  ClassificationReport c = classify(t);
  out["flags"] = {{"hypo", c.hypo},
                  {"contact_hypo", c.contact_hypo},
                  {"nearly_hypo", c.nearly_hypo},
                  {"double_hypo", c.double_hypo},
                  {"sasaki_einstein", c.sasaki_einstein},
                  {"half_flat_cone", c.half_flat_cone},
                  {"kahler_cone", c.kahler_cone}};
  if (cmd == Command::kClassify) return out;

  RicciReport r = curvature_report(cf);
  out["curvature"] = {{"s", r.s_oracle.str()},
                      {"lambda", r.lambda.str()},
                      {"mu", r.mu.str()},
                      {"ric", ric_json(r.ric_oracle)}};
  if (cmd == Command::kCurvature) return out;

  VerificationReport v = verify_all(cf);
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& ck : v.checks)
    checks.push_back({{"check", ck.name}, {"pass", ck.pass}, {"detail", ck.detail}});
  out["verification"] = checks;
  return out;
}

bool report_clean(const nlohmann::json& report) {
  if (report.contains("jacobi") && !report["jacobi"].get<bool>()) return false;
  if (report.contains("adapted") && !report["adapted"].get<bool>()) return false;
  if (report.contains("verification"))
    for (const auto& c : report["verification"])
      if (!c["pass"].get<bool>()) return false;
  return true;
}

std::string human_report(const nlohmann::json& rep) {
  std::ostringstream os;
  os << "instance: " << rep["name"].get<std::string>() << "\n";
  if (rep.contains("structure")) {
    for (int i = 1; i <= kDim; ++i) {
      std::string key = "d" + std::to_string(i);
      std::string val = rep["structure"][key].get<std::string>();
      if (val != "0") os << "  dw" << i << " = " << val << "\n";
    }
  }
  os << "jacobi: " << (rep["jacobi"].get<bool>() ? "ok" : "FAIL") << ", adapted: "
     << (rep["adapted"].get<bool>() ? "ok" : "FAIL") << "\n";
  if (rep.contains("torsion")) {
    const auto& t = rep["torsion"];
    os << "torsion forms:\n";
    for (int i = 0; i < 4; ++i)
      os << "  ν" << i + 1 << " = " << t["nu"][i].get<std::string>() << "\n";
    for (int i = 0; i < 4; ++i)
      os << "  σ" << i + 1 << " = " << t["sigma"][i].get<std::string>() << "\n";
    for (int i = 0; i < 3; ++i)
      os << "  φ" << i + 1 << " = " << t["phi"][i].get<std::string>() << "\n";
    os << "  f_ij = [";
    for (int r = 0; r < 3; ++r) {
      os << (r ? "; " : "");
      for (int j = 0; j < 3; ++j)
        os << t["f"][r][j].get<std::string>() << (j < 2 ? " " : "");
    }
    os << "]\n";
  }
  if (rep.contains("flags")) {
    os << "classification:";
    for (auto& [k, v] : rep["flags"].items())
      if (v.get<bool>()) os << " " << k;
    bool any = false;
    for (auto& [k, v] : rep["flags"].items()) any = any || v.get<bool>();
    if (!any) os << " (none)";
    os << "\n";
  }
  if (rep.contains("curvature")) {
    const auto& c = rep["curvature"];
    os << "curvature: s = " << c["s"].get<std::string>()
       << ", λ = " << c["lambda"].get<std::string>()
       << ", μ = " << c["mu"].get<std::string>() << "\n";
    os << "Ric =\n";
    for (int i = 0; i < kDim; ++i) {
      os << "  [";
      for (int j = 0; j < kDim; ++j)
        os << c["ric"][i][j].get<std::string>() << (j < kDim - 1 ? ", " : "");
      os << "]\n";
    }
  }
  if (rep.contains("verification")) {
    int fails = 0;
    for (const auto& c : rep["verification"]) {
      bool pass = c["pass"].get<bool>();
      if (!pass) ++fails;
      os << (pass ? "  pass  " : "  FAIL  ") << c["check"].get<std::string>();
      std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) os << "  (" << detail << ")";
      os << "\n";
    }
    os << (fails == 0 ? "verification: all checks passed\n"
                      : "verification: " + std::to_string(fails) + " check(s) FAILED\n");
  }
  return os.str();
}

std::string report_value_at(const nlohmann::json& report, const std::string& key) {
  const nlohmann::json* cur = &report;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, '.')) {
    if (part.empty()) throw ParseError("bad expectation key '" + key + "'");
    if (cur->is_array()) {
      size_t idx = 0;
      try {
        idx = std::stoul(part);
      } catch (...) {
        throw ParseError("expected array index in key '" + key + "'");
      }
      if (idx >= cur->size()) throw ParseError("index out of range in key '" + key + "'");
      cur = &(*cur)[idx];
    } else if (cur->is_object()) {
      if (!cur->contains(part)) throw ParseError("no field '" + part + "' in key '" + key + "'");
      cur = &(*cur)[part];
    } else {
      throw ParseError("key '" + key + "' descends into a scalar");
    }
  }
  if (cur->is_string()) return cur->get<std::string>();
  if (cur->is_boolean()) return cur->get<bool>() ? "true" : "false";
  return cur->dump();
}

}  // namespace su2curv
