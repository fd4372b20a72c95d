#include "su2curv.h"

#include <cstring>
#include <new>
#include <string>

#include "catalog.hpp"
#include "parse.hpp"
#include "report.hpp"

using namespace su2curv;

struct su2curv_instance {
  std::string name;
  Coframe5 cf;
  std::vector<Expectation> expected;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_err(char** err, const std::string& msg) {
  if (err) *err = dup_string(msg);
}

}  // namespace

extern "C" {

su2curv_status su2curv_instance_parse(const char* text, su2curv_instance** out, char** err) {
  if (!text || !out) {
    set_err(err, "null argument");
    return SU2CURV_ERR_INTERNAL;
  }
  *out = nullptr;
  try {
    StructureFile sf = parse_structure_file(text);
    *out = new su2curv_instance{sf.name, sf.cf, sf.expected};
    return SU2CURV_OK;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return SU2CURV_ERR_PARSE;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return SU2CURV_ERR_INTERNAL;
  }
}

su2curv_status su2curv_instance_from_catalog(const char* name, su2curv_instance** out,
                                             char** err) {
  if (!name || !out) {
    set_err(err, "null argument");
    return SU2CURV_ERR_INTERNAL;
  }
  *out = nullptr;
  try {
    const CatalogEntry* e = find_catalog(name);
    if (!e) {
      set_err(err, "no catalog instance named '" + std::string(name) + "'");
      return SU2CURV_ERR_UNKNOWN_NAME;
    }
    *out = new su2curv_instance{e->name, e->cf, {}};
    return SU2CURV_OK;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return SU2CURV_ERR_INTERNAL;
  }
}

void su2curv_instance_free(su2curv_instance* inst) { delete inst; }

const char* su2curv_instance_name(const su2curv_instance* inst) {
  return inst ? inst->name.c_str() : "";
}

char* su2curv_catalog_json(void) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : catalog())
    arr.push_back({{"name", e.name}, {"description", e.description}});
  return dup_string(arr.dump(2));
}

char* su2curv_catalog_text(void) {
  std::string out;
  for (const auto& e : catalog()) out += e.name + " - " + e.description + "\n";
  return dup_string(out);
}

namespace {

su2curv_status run_impl(const su2curv_instance* inst, const char* command, bool human,
                        char** out, char** err) {
  if (!inst || !command || !out) {
    set_err(err, "null argument");
    return SU2CURV_ERR_INTERNAL;
  }
  *out = nullptr;
  try {
    Command cmd = command_from_string(command);
    nlohmann::json rep = build_report(inst->name, inst->cf, cmd);
    *out = dup_string(human ? human_report(rep) : rep.dump(2));
    return report_clean(rep) ? SU2CURV_OK : SU2CURV_ERR_VERIFY;
  } catch (const ParseError& e) {
    set_err(err, e.what());
    return SU2CURV_ERR_BAD_COMMAND;
  } catch (const std::exception& e) {
    set_err(err, e.what());
    return SU2CURV_ERR_INTERNAL;
  }
}

}  // namespace

su2curv_status su2curv_run(const su2curv_instance* inst, const char* command, char** json_out,
                           char** err) {
  return run_impl(inst, command, false, json_out, err);
}

su2curv_status su2curv_run_text(const su2curv_instance* inst, const char* command,
                                char** text_out, char** err) {
  return run_impl(inst, command, true, text_out, err);
}

int su2curv_expect_count(const su2curv_instance* inst) {
  return inst ? int(inst->expected.size()) : 0;
}

su2curv_status su2curv_check_expected(const su2curv_instance* inst, char** detail) {
  if (!inst) return SU2CURV_ERR_INTERNAL;
  try {
    nlohmann::json rep = build_report(inst->name, inst->cf, Command::kVerify);
    std::string fails;
    for (const auto& e : inst->expected) {
      std::string got;
      try {
        got = report_value_at(rep, e.key);
      } catch (const ParseError& pe) {
        fails += std::string(fails.empty() ? "" : "\n") + e.key + ": " + pe.what();
        continue;
      }
      if (got != e.value)
        fails += std::string(fails.empty() ? "" : "\n") + e.key + ": expected " + e.value +
                 ", got " + got;
    }
    if (fails.empty()) {
      if (detail) *detail = nullptr;
      return SU2CURV_OK;
    }
    if (detail) *detail = dup_string(fails);
    return SU2CURV_ERR_VERIFY;
  } catch (const std::exception& e) {
    if (detail) *detail = dup_string(e.what());
    return SU2CURV_ERR_INTERNAL;
  }
}

void su2curv_free_string(char* s) { delete[] s; }

const char* su2curv_version(void) { return "1.0.0"; }

}  // extern "C"
