#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qhull/hulls.hpp"
#include "qhull/quotient_rings.hpp"

namespace qhull {

/// Rings and modules read from the block text format. Tables in the file may
/// use any labeling; everything is validated and stored canonically.
struct Document {
  struct NamedModule {
    std::string name;
    ModulePtr module;
    std::vector<Elem> embed;  // optional `embed` line, canonical target indices
  };
  std::vector<RingPtr> rings;
  std::vector<NamedModule> modules;

  RingPtr ring(std::string_view name) const;
  /// A module declared in the file; "R" also names the regular module of
  /// the only ring when no module of that name is declared.
  ModulePtr module(std::string_view name) const;
};

/// Throws AlgebraError(Parse) with the line number, or the validation error
/// of the offending structure.
Document parse_document(std::string_view text);
Document load_document(const std::filesystem::path& path);

std::string write_ring(const FiniteRing& r);
/// `module <label> over <ring>` block; `embed` appended when given.
std::string write_module(const RightModule& m, const std::vector<Elem>* embed = nullptr);
/// Module block of the hull with its provenance `label` and `embed` lines.
std::string write_hull(const HullResult& h);
/// Ring block of Q(R) followed by the `embed` line of R → Q.
std::string write_quotient_ring(const QuotientRingResult& q);

}  // namespace qhull
