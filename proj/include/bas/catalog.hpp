#ifndef BAS_CATALOG_HPP
#define BAS_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bas/constructions.hpp"
#include "bas/hermitian.hpp"

namespace bas {

struct CatalogEntry {
  std::string name;
  std::string description;
  HermitianData data;
  std::map<std::string, bool> expected;  // frozen verdict fixture (subset of suite checks)
  std::optional<KNilpotentData> k_nilpotent;
};

const std::vector<std::string>& catalog_names();

/// Throws UnknownEntryError for names outside the catalog.
CatalogEntry catalog_build(const std::string& name);

/// The torus-bundle presentation of a calabi_eckmann entry (for the
/// naturally-reductive witness); throws UnknownEntryError otherwise.
TorusBundleData calabi_eckmann_bundle(const std::string& name);

/// Recomputes verdict_suite for the entry and compares with the fixture;
/// returns the list of mismatched check names (empty = verified).
std::vector<std::string> catalog_verify(const CatalogEntry& entry);

}  // namespace bas

#endif
