#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhull/catalog.hpp"
#include "qhull/config.hpp"

namespace qhull {

enum class Verdict { Pass, Fail, Skipped };
const char* verdict_name(Verdict v);

struct CheckRecord {
  std::string name;
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // empty on pass
  std::uint64_t millis = 0;
};

struct SuiteOptions {
  std::vector<std::string> checks;  // empty = every registered check
  unsigned jobs = 1;
  bool timings = false;             // otherwise millis is reported as 0
  std::string catalog_name = "builtin";
};

struct SuiteReport {
  Config config;
  SuiteOptions options;
  std::vector<CheckRecord> records;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

/// Registered check names in execution order.
const std::vector<std::string>& check_names();

/// Runs every (check, instance) pair; independent pairs run on `jobs`
/// threads, records keep a fixed order. A failing pair never stops the run.
/// Throws UnknownCheck for an unregistered name.
SuiteReport run_suite(const Catalog& catalog, const SuiteOptions& options, const Context& ctx);

std::string report_json(const SuiteReport& report);
std::string report_text(const SuiteReport& report);

struct ContinuityRecord {
  std::string instance;
  Verdict verdict = Verdict::Pass;  // Fail = continuous M with non-continuous Ẽ(M)
  bool continuous = false;
  std::optional<bool> hull_continuous;
  std::string witness;              // serialized M and Ẽ(M) on Fail, cap message on Skipped
};

/// For each continuous M, whether Ẽ(M) is continuous.
std::vector<ContinuityRecord> search_continuous_transfer(const Catalog& catalog, const Context& ctx);

struct SingularSimpleReport {
  std::vector<ModulePtr> simples;           // one per isomorphism class
  std::vector<ModulePtr> singular;          // the singular ones
  ModulePtr p;                              // their direct sum (zero module when none)
  bool p_complete = false;
  std::vector<std::string> containing;      // catalog modules holding a copy of P
  std::vector<std::string> violations;
  bool holds() const { return violations.empty(); }
};

/// Simple modules R/I over maximal right ideals I, their singular members,
/// and completeness of every given module that contains their sum.
SingularSimpleReport singular_simple_check(const RingPtr& r, const std::vector<ModulePtr>& modules,
                                           const Context& ctx = {});

}  // namespace qhull
