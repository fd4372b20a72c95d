#pragma once

#include <string>
#include <vector>

#include "coframe.hpp"

namespace su2curv {

struct CatalogEntry {
  std::string name;
  std::string description;  // provenance note
  Coframe5 cf;
};

// Built-in instances. Every entry is re-validated (Jacobi) on first access;
// the test suite additionally runs the full verification harness over the
// whole catalog, so a bad entry cannot survive a build.
const std::vector<CatalogEntry>& catalog();

const CatalogEntry* find_catalog(const std::string& name);

}  // namespace su2curv
