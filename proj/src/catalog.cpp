#include "catalog.hpp"

#include <stdexcept>

#include "parse.hpp"

namespace su2curv {

namespace {

CatalogEntry entry(const std::string& name, const std::string& description,
                   const std::string& equations) {
  StructureFile sf = parse_structure_file(equations);
  return CatalogEntry{name, description, Coframe5(name, {sf.cf.d_basis(1), sf.cf.d_basis(2),
                                                         sf.cf.d_basis(3), sf.cf.d_basis(4),
                                                         sf.cf.d_basis(5)})};
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> v;
  v.push_back(entry("abelian", "abelian R^5; every torsion form vanishes, flat metric", ""));
  v.push_back(entry("heisenberg",
                    "Heisenberg algebra h5 with the contact normalization d(alpha) = -2 omega_1; "
                    "contact-Hypo with f_23 = 0",
                    "d5 = -2*12 - 2*34"));
  v.push_back(entry("h5_hypo",
                    "Heisenberg algebra in the literature normalization (0,0,0,0,12+34); Hypo "
                    "with phi_1 = 1",
                    "d5 = 12 + 34"));
  v.push_back(entry("h3_r2",
                    "(0,0,0,0,12) = h3 + R^2; Hypo with phi_1 = 1/2 and sigma_4 != 0",
                    "d5 = 12"));
  v.push_back(entry("nil_12_13",
                    "nilpotent (0,0,0,12,13); nonzero nu_1, phi_2, sigma_4 in the adapted frame",
                    "d4 = 12\nd5 = 13"));
  v.push_back(entry("solv_nu4",
                    "solvable [e1,e5] = e5 (hyperbolic plane x R^3); pure nu_4 torsion, pins the "
                    "codifferential sign",
                    "d5 = -15"));
  v.push_back(entry("solv_mixed",
                    "solvable [e1,e5] = e5, [e1,e2] = -e5; nu_4 with phi_1, sigma_4; mixed Ricci "
                    "entries pin the symmetric-product normalization",
                    "d5 = 12 - 15"));
  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v = build();
    for (const auto& e : v)
      if (e.cf.validate_jacobi())
        throw std::logic_error("catalog entry '" + e.name + "' fails Jacobi");
    return v;
  }();
  return entries;
}

const CatalogEntry* find_catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace su2curv
