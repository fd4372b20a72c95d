// Command-line front end; all engine access goes through the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "su2curv.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { su2curv_free_string(s); }
};

struct InstanceGuard {
  su2curv_instance* inst = nullptr;
  ~InstanceGuard() { su2curv_instance_free(inst); }
};

int load_instance(const std::string& source, InstanceGuard& g) {
  StringGuard err;
  su2curv_status st;
  if (std::filesystem::exists(source)) {
    std::ifstream in(source);
    if (!in) {
      std::cerr << "error: cannot read '" << source << "'\n";
      return kExitInputError;
    }
    std::ostringstream text;
    text << in.rdbuf();
    st = su2curv_instance_parse(text.str().c_str(), &g.inst, &err.s);
  } else {
    st = su2curv_instance_from_catalog(source.c_str(), &g.inst, &err.s);
  }
  if (st != SU2CURV_OK) {
    std::cerr << "error: " << (err.s ? err.s : "unknown") << "\n";
    return kExitInputError;
  }
  return kExitOk;
}

int run_command(const std::string& cmd, const std::string& source, bool json,
                bool check_expected) {
  InstanceGuard inst;
  if (int rc = load_instance(source, inst); rc != kExitOk) return rc;

  StringGuard out, err;
  su2curv_status st = json ? su2curv_run(inst.inst, cmd.c_str(), &out.s, &err.s)
                           : su2curv_run_text(inst.inst, cmd.c_str(), &out.s, &err.s);
  if (st == SU2CURV_ERR_BAD_COMMAND || st == SU2CURV_ERR_INTERNAL) {
    std::cerr << "error: " << (err.s ? err.s : "unknown") << "\n";
    return kExitInputError;
  }
  if (out.s) std::cout << out.s << (json ? "\n" : "");

  int rc = (st == SU2CURV_OK) ? kExitOk : kExitVerifyFailed;

  if (check_expected) {
    if (su2curv_expect_count(inst.inst) == 0) {
      std::cerr << "note: no expect lines in input\n";
    } else {
      StringGuard detail;
      su2curv_status est = su2curv_check_expected(inst.inst, &detail.s);
      if (est == SU2CURV_OK) {
        std::cout << "expected: all " << su2curv_expect_count(inst.inst) << " value(s) match\n";
      } else {
        std::cout << "expected: MISMATCH\n" << (detail.s ? detail.s : "") << "\n";
        rc = kExitVerifyFailed;
      }
    }
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact SU(2)-structure torsion and curvature calculator"};
  app.require_subcommand(1);

  std::string source;
  bool as_json = false;
  bool check_expected = false;

  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance)
      sub->add_option("instance", source, "catalog instance name or structure file path")
          ->required();
    sub->add_flag("--json", as_json, "machine-readable JSON report");
    sub->add_flag("--check-expected", check_expected,
                  "compare against the file's expect lines");
  };

  add_common(app.add_subcommand("validate", "Jacobi and adapted-frame checks"), true);
  add_common(app.add_subcommand("torsion", "extract the torsion forms"), true);
  add_common(app.add_subcommand("classify", "special-structure classification"), true);
  add_common(app.add_subcommand("curvature", "Ricci tensor and scalar curvature"), true);
  add_common(app.add_subcommand("verify", "run every cross-verification identity"), true);
  add_common(app.add_subcommand("catalog", "list built-in instances"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string& name = sub->get_name();
    if (name == "catalog") {
      StringGuard s;
      s.s = as_json ? su2curv_catalog_json() : su2curv_catalog_text();
      std::cout << (s.s ? s.s : "") << (as_json ? "\n" : "");
      return kExitOk;
    }
    return run_command(name, source, as_json, check_expected);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
