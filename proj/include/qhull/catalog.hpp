#pragma once

#include <string>
#include <vector>

#include "qhull/config.hpp"
#include "qhull/module.hpp"
#include "qhull/text_format.hpp"

namespace qhull {

struct CatalogEntry {
  RingPtr ring;
  std::vector<ModulePtr> modules;
  std::vector<std::string> tags;
};

struct CatalogOptions {
  bool commutative_only = false;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<std::string> trimmed;  // instance ids dropped by a size cap

  std::size_t instance_count() const;
};

/// "<ring> :: <module>"
std::string instance_id(const RightModule& m);

/// Z/2, Z/3, Z/4, Z/6, Z/8, F4, F2xF2, T2(F2), T2(F3), M2(F2): each with its
/// regular module, every nonzero R/I, and a few direct sums. Modules above
/// max_module_order are trimmed; max_module_order = 0 yields no entries.
Catalog builtin_catalog(const Config& config, const CatalogOptions& options = {});

/// One entry per ring of the document, holding the modules declared over it
/// (the regular module when none is declared).
Catalog catalog_from_document(const Document& doc);

}  // namespace qhull
