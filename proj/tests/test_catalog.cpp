#include <gtest/gtest.h>

#include <set>

#include "qhull/cache.hpp"
#include "qhull/catalog.hpp"
#include "qhull/error.hpp"
#include "qhull/suite.hpp"
#include "qhull/text_format.hpp"
#include "sample_modules.hpp"

using namespace qhull;
using namespace qhull::testing;

// =============================================================================
// Text format
// =============================================================================

TEST(TextFormat, RingAndModuleRoundTrip) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto text = write_ring(*t2.ring) + "\n" + write_module(*t2_bottom_row(t2));
  const auto doc = parse_document(text);
  ASSERT_EQ(doc.rings.size(), 1u);
  ASSERT_EQ(doc.modules.size(), 1u);
  EXPECT_TRUE(same_ring(*doc.rings[0], *t2.ring));
  EXPECT_TRUE(same_module(*doc.modules[0].module, *t2_bottom_row(t2)));
  EXPECT_EQ(write_ring(*doc.rings[0]) + "\n" + write_module(*doc.modules[0].module), text);
}

TEST(TextFormat, RegularModuleFallback) {
  const auto doc = parse_document(write_ring(*zmod(6)));
  ASSERT_NE(doc.module("R"), nullptr);
  EXPECT_EQ(doc.module("R")->order(), 6u);
  EXPECT_EQ(doc.module("S"), nullptr);
}

TEST(TextFormat, RelabeledTablesAreCanonicalized) {
  // Z/3 written with 0 and 2 swapped; 2 is the identity.
  const auto doc = parse_document(
      "ring Z3\norder 3\none 2\nadd\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 2 1\n0 1 2\n");
  ASSERT_EQ(doc.rings.size(), 1u);
  EXPECT_EQ(doc.rings[0]->order(), 3u);
}

TEST(TextFormat, ParseErrorsCarryLineNumbers) {
  try {
    parse_document("ring Z2\norder 2\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 x\n");
    FAIL() << "expected a parse error";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    EXPECT_NE(std::string(e.what()).find("line 9"), std::string::npos) << e.what();
  }
}

TEST(TextFormat, BrokenDistributivityIsRejected) {
  // Z/4 with mul[2][3] changed from 2 to 1.
  EXPECT_ANY_THROW(parse_document(
      "ring Z4\norder 4\none 1\nadd\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
      "mul\n0 0 0 0\n0 1 2 3\n0 2 0 1\n0 3 2 1\n"));
}

TEST(TextFormat, HullCarriesEmbedding) {
  const auto h = injective_hull(zmod_over(4, 2));
  const auto doc = parse_document(write_ring(*zmod(4)) + "\n" + write_hull(h));
  ASSERT_EQ(doc.modules.size(), 1u);
  EXPECT_EQ(doc.modules[0].module->order(), 4u);
  EXPECT_EQ(doc.modules[0].embed.size(), 2u);
}

TEST(TextFormat, QuotientRingBlock) {
  const auto q = q_max(upper_triangular_ring(galois_field(2), 2).ring);
  const auto text = write_quotient_ring(q);
  EXPECT_NE(text.find("order 16"), std::string::npos);
  EXPECT_NE(text.find("embed "), std::string::npos);
  const auto doc = parse_document(text);
  ASSERT_EQ(doc.rings.size(), 1u);
  EXPECT_EQ(doc.rings[0]->order(), 16u);
}

// =============================================================================
// Catalog
// =============================================================================

TEST(Catalog, DefaultSize) {
  const auto c = builtin_catalog(Config{});
  EXPECT_GE(c.entries.size(), 10u);
  EXPECT_GE(c.instance_count(), 40u);
  EXPECT_TRUE(c.trimmed.empty());
  std::set<std::string> names;
  for (const auto& e : c.entries) names.insert(e.ring->name());
  for (const char* r : {"Z/2", "Z/3", "Z/4", "Z/6", "Z/8", "F4", "F2xF2", "T2(F2)", "T2(F3)", "M2(F2)"})
    EXPECT_TRUE(names.count(r)) << r;
}

TEST(Catalog, ModulesOverTheirRing) {
  const auto c = builtin_catalog(Config{});
  for (const auto& e : c.entries)
    for (const auto& m : e.modules) EXPECT_TRUE(same_ring(*m->ring(), *e.ring)) << instance_id(*m);
}

TEST(Catalog, InstanceIdsAreUnique) {
  std::set<std::string> ids;
  const auto c = builtin_catalog(Config{});
  for (const auto& e : c.entries)
    for (const auto& m : e.modules) EXPECT_TRUE(ids.insert(instance_id(*m)).second) << instance_id(*m);
}

TEST(Catalog, CommutativeFilter) {
  const auto c = builtin_catalog(Config{}, {true});
  ASSERT_FALSE(c.entries.empty());
  for (const auto& e : c.entries) {
    const auto& r = *e.ring;
    for (Elem a = 0; a < r.order(); ++a)
      for (Elem b = 0; b < r.order(); ++b) EXPECT_EQ(r.mul(a, b), r.mul(b, a)) << r.name();
  }
}

TEST(Catalog, ZeroCapIsEmpty) {
  Config cfg;
  cfg.max_module_order = 0;
  const auto c = builtin_catalog(cfg);
  EXPECT_TRUE(c.entries.empty());
  const auto rep = run_suite(c, {}, Context{cfg});
  EXPECT_TRUE(rep.records.empty());
  EXPECT_EQ(rep.pass + rep.fail + rep.skipped, 0u);
}

TEST(Catalog, SmallCapTrimsWithRecord) {
  Config cfg;
  cfg.max_module_order = 8;
  const auto c = builtin_catalog(cfg);
  EXPECT_FALSE(c.trimmed.empty());
  for (const auto& e : c.entries)
    for (const auto& m : e.modules) EXPECT_LE(m->order(), 8u);
  SuiteOptions opts;
  opts.checks = {"hull_sandwich"};
  const auto rep = run_suite(c, opts, Context{cfg});
  EXPECT_EQ(rep.fail, 0u);
  EXPECT_GE(rep.skipped, c.trimmed.size());
}

TEST(Catalog, FromDocument) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto doc = parse_document(write_ring(*t2.ring) + "\n" + write_module(*t2_corner(t2)));
  const auto c = catalog_from_document(doc);
  ASSERT_EQ(c.entries.size(), 1u);
  EXPECT_EQ(c.entries[0].modules.size(), 1u);
}

// =============================================================================
// Suite
// =============================================================================

TEST(Suite, UnknownCheck) {
  SuiteOptions opts;
  opts.checks = {"no_such_check"};
  try {
    run_suite(builtin_catalog(Config{}), opts, {});
    FAIL() << "expected UnknownCheck";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCheck);
  }
}

TEST(Suite, SelectedChecksPassAndAreDeterministic) {
  const auto c = builtin_catalog(Config{});
  SuiteOptions opts;
  opts.checks = {"rational_hull_formulas", "hull_sandwich", "quotient_ring", "singular_simples"};
  const auto a = run_suite(c, opts, {});
  opts.jobs = 3;
  const auto b = run_suite(c, opts, {});
  EXPECT_EQ(a.fail, 0u);
  EXPECT_GT(a.pass, 0u);
  opts.jobs = 1;
  EXPECT_EQ(report_json(a), report_json(b));
  EXPECT_EQ(report_text(a), report_text(b));
}

TEST(Suite, RecordsFollowCheckOrder) {
  const auto c = builtin_catalog(Config{});
  SuiteOptions opts;
  opts.checks = {"quotient_ring", "hull_idempotence"};
  const auto rep = run_suite(c, opts, {});
  ASSERT_EQ(rep.records.size(), c.entries.size() + c.instance_count());
  EXPECT_EQ(rep.records.front().name, "quotient_ring");
  EXPECT_EQ(rep.records.back().name, "hull_idempotence");
  for (const auto& r : rep.records) EXPECT_EQ(r.millis, 0u);
}

TEST(Suite, JsonShape) {
  SuiteOptions opts;
  opts.checks = {"quotient_ring"};
  const auto json = report_json(run_suite(builtin_catalog(Config{}), opts, {}));
  for (const char* key : {"\"config\"", "\"checks\"", "\"summary\"", "\"seed\": 0", "\"verdict\": \"pass\"", "\"millis\""})
    EXPECT_NE(json.find(key), std::string::npos) << key;
}

TEST(Suite, BuiltinCatalogSeparatesDensityNotions) {
  SuiteOptions opts;
  opts.checks = {"dense_essential_separation", "relative_density_separation"};
  const auto rep = run_suite(builtin_catalog(Config{}), opts, {});
  ASSERT_EQ(rep.records.size(), 2u);
  for (const auto& r : rep.records) {
    EXPECT_EQ(r.verdict, Verdict::Pass) << r.name;
    EXPECT_FALSE(r.witness.empty());
  }
}

TEST(Suite, SeparationWithoutWitnessIsSkipped) {
  Catalog c;
  c.entries.push_back({zmod(2), {regular(zmod(2))}, {}});
  SuiteOptions opts;
  opts.checks = {"dense_essential_separation"};
  const auto rep = run_suite(c, opts, {});
  ASSERT_EQ(rep.records.size(), 1u);
  EXPECT_EQ(rep.records[0].verdict, Verdict::Skipped);
}

TEST(Suite, CacheDoesNotChangeVerdicts) {
  const auto dir = std::filesystem::temp_directory_path() / "qhull_suite_cache_test";
  std::filesystem::remove_all(dir);
  const auto c = builtin_catalog(Config{});
  SuiteOptions opts;
  opts.checks = {"hull_sandwich", "rational_hull_formulas", "quotient_ring", "hull_transfer"};
  const auto plain = report_json(run_suite(c, opts, {}));
  Context cold{Config{}, std::make_shared<HullCache>(dir)};
  EXPECT_EQ(report_json(run_suite(c, opts, cold)), plain);
  // Fresh memory, warm disk.
  Context warm{Config{}, std::make_shared<HullCache>(dir)};
  EXPECT_EQ(report_json(run_suite(c, opts, warm)), plain);
  EXPECT_GT(warm.cache->hits(), 0u);
  std::filesystem::remove_all(dir);
}

// =============================================================================
// Searches and singular simples
// =============================================================================

TEST(ContinuitySearch, EmptyCatalog) {
  EXPECT_TRUE(search_continuous_transfer(Catalog{}, {}).empty());
}

TEST(ContinuitySearch, CornerIsEvaluated) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  Catalog c;
  c.entries.push_back({t2.ring, {t2_corner(t2)}, {}});
  c.entries.push_back({zmod(4), {regular(zmod(4))}, {}});
  const auto recs = search_continuous_transfer(c, {});
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_TRUE(recs[0].continuous);
  ASSERT_TRUE(recs[0].hull_continuous.has_value());
  EXPECT_EQ(recs[0].verdict, Verdict::Pass);
  // Injective, so the hull is the module itself.
  EXPECT_TRUE(recs[1].continuous);
  EXPECT_EQ(recs[1].hull_continuous, std::optional<bool>(true));
}

TEST(SingularSimples, SemisimpleHasNone) {
  const auto r = matrix_ring(galois_field(2), 2).ring;
  const auto rep = singular_simple_check(r, {regular(r)});
  EXPECT_EQ(rep.simples.size(), 1u);
  EXPECT_TRUE(rep.singular.empty());
  EXPECT_TRUE(rep.holds());
}

TEST(SingularSimples, Z4) {
  const auto rep = singular_simple_check(zmod(4), {regular(zmod(4)), zmod_over(4, 2)});
  ASSERT_EQ(rep.singular.size(), 1u);
  EXPECT_EQ(rep.p->order(), 2u);
  EXPECT_TRUE(rep.p_complete);
  EXPECT_EQ(rep.containing.size(), 2u);
  EXPECT_TRUE(rep.holds());
}

TEST(SingularSimples, T2F2) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto rep = singular_simple_check(t2.ring, {regular(t2.ring), t2_corner(t2), t2_bottom_row(t2)});
  // Simples act through a or through c. The annihilator (0 F;0 F) of the first
  // meets every xR, since x(0 0;0 1) or x(0 1;0 0) is nonzero; the corner's
  // annihilator (F F;0 0) misses (0 0;0 F).
  EXPECT_EQ(rep.simples.size(), 2u);
  EXPECT_EQ(rep.singular.size(), 1u);
  EXPECT_TRUE(rep.holds()) << (rep.violations.empty() ? "" : rep.violations.front());
}
