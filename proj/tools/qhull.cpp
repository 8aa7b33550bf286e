#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qhull/cache.hpp"
#include "qhull/catalog.hpp"
#include "qhull/density.hpp"
#include "qhull/error.hpp"
#include "qhull/hulls.hpp"
#include "qhull/quotient_rings.hpp"
#include "qhull/suite.hpp"
#include "qhull/text_format.hpp"

using namespace qhull;

namespace {

enum Exit { Ok = 0, Failures = 1, Usage = 2, Cap = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ModulePtr module_named(const Document& doc, const std::string& name) {
  if (auto m = doc.module(name)) return m;
  throw UsageError("no module '" + name + "' in the file");
}

std::vector<Elem> parse_elements(const std::string& list) {
  std::vector<Elem> out;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    try {
      out.push_back(static_cast<Elem>(std::stoul(item)));
    } catch (const std::exception&) {
      throw UsageError("bad element '" + item + "'");
    }
  }
  return out;
}

std::string elements_text(const std::vector<Elem>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

Catalog load_catalog(const std::string& name, const Config& config) {
  if (name == "builtin") return builtin_catalog(config);
  if (!std::filesystem::exists(name)) throw UsageError("catalog file not found: " + name);
  return catalog_from_document(load_document(name));
}

Document load(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("file not found: " + path);
  return load_document(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Injective, rational and quasi-injective hulls of finite modules"};
  app.require_subcommand(1);

  Context ctx;
  ctx.cache = HullCache::from_environment();
  std::function<int()> action;

  auto* check = app.add_subcommand("check", "Parse and validate every structure in a file");
  std::string check_file;
  check->add_option("file", check_file)->required();
  check->callback([&] {
    action = [&] {
      const auto doc = load(check_file);
      for (const auto& r : doc.rings) std::cout << "ring " << r->name() << " order " << r->order() << " ok\n";
      for (const auto& m : doc.modules)
        std::cout << "module " << m.name << " over " << m.module->ring()->name() << " order " << m.module->order() << " ok\n";
      return Ok;
    };
  });

  auto* hull = app.add_subcommand("hull", "Print a hull as a module block");
  std::string kind, hull_file, hull_module;
  hull->add_option("--kind", kind)->required()->check(CLI::IsMember({"injective", "rational", "quasi"}));
  hull->add_option("file", hull_file)->required();
  hull->add_option("module", hull_module)->required();
  hull->callback([&] {
    action = [&] {
      const auto m = module_named(load(hull_file), hull_module);
      const auto h = kind == "injective" ? injective_hull(m, ctx)
                     : kind == "rational" ? rational_hull(m, ctx)
                                          : quasi_injective_hull(m, ctx);
      std::cout << write_hull(h);
      return Ok;
    };
  });

  auto* predicate = app.add_subcommand("predicate", "Evaluate a module predicate");
  std::string pred, pred_file, pred_module, sub_list, k_module;
  predicate
      ->add_option("name", pred)
      ->required()
      ->check(CLI::IsMember(
          {"dense", "reldense", "essential", "polyform", "nonsingular", "qi", "qc", "extending", "continuous"}));
  predicate->add_option("file", pred_file)->required();
  predicate->add_option("module", pred_module)->required();
  predicate->add_option("--sub", sub_list, "Generators of N (canonical element indices, comma separated)");
  predicate->add_option("--k", k_module, "Module K for reldense (default: the module itself)");
  predicate->callback([&] {
    action = [&] {
      const auto doc = load(pred_file);
      const auto m = module_named(doc, pred_module);
      if (pred == "dense" || pred == "reldense" || pred == "essential") {
        if (sub_list.empty()) throw UsageError(pred + " needs --sub");
        const auto n = submodule_generated(m, parse_elements(sub_list));
        const auto k = k_module.empty() ? m : module_named(doc, k_module);
        const auto v = pred == "dense" ? is_dense(n, m, ctx) : pred == "essential" ? is_essential(n, m) : is_rel_dense(n, m, k, ctx);
        std::cout << (v.answer ? "true" : "false");
        if (!v.answer) std::cout << " witness " << elements_text(v.witness);
        std::cout << "\n";
        return Ok;
      }
      bool answer = false;
      if (pred == "polyform") answer = is_polyform(m, ctx);
      if (pred == "nonsingular") answer = is_nonsingular(m, ctx);
      if (pred == "qi") answer = is_quasi_injective(m, ctx);
      if (pred == "qc") answer = is_quasi_continuous(m, ctx);
      if (pred == "extending") answer = is_extending(m, ctx);
      if (pred == "continuous") answer = is_continuous(m, ctx);
      std::cout << (answer ? "true" : "false") << "\n";
      return Ok;
    };
  });

  auto* qmax = app.add_subcommand("qmax", "Maximal right ring of quotients");
  std::string qmax_file, qmax_ring;
  qmax->add_option("file", qmax_file)->required();
  qmax->add_option("--ring", qmax_ring, "Ring name when the file declares several");
  qmax->callback([&] {
    action = [&] {
      const auto doc = load(qmax_file);
      RingPtr r;
      if (!qmax_ring.empty()) r = doc.ring(qmax_ring);
      else if (doc.rings.size() == 1) r = doc.rings.front();
      if (!r) throw UsageError("name the ring with --ring");
      std::cout << write_quotient_ring(q_max(r, ctx));
      return Ok;
    };
  });

  auto* suite = app.add_subcommand("suite", "Replay every registered check over a catalog");
  std::string catalog_name = "builtin", checks_list, report_kind = "text", out_path;
  SuiteOptions options;
  bool debug = false;
  suite->add_option("--catalog", catalog_name, "builtin or a file");
  suite->add_option("--checks", checks_list, "Comma separated check names");
  suite->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
  suite->add_flag("--debug-crosscheck", debug);
  suite->add_option("--report", report_kind)->check(CLI::IsMember({"json", "text"}));
  suite->add_option("--out", out_path);
  suite->add_flag("--timings", options.timings, "Report wall time per check (makes output run dependent)");
  suite->add_flag_callback("--list", [] {
    for (const auto& n : check_names()) std::cout << n << "\n";
    std::exit(Ok);
  }, "List check names");
  suite->callback([&] {
    action = [&] {
      ctx.config.debug_crosscheck = debug;
      options.catalog_name = catalog_name;
      std::stringstream in(checks_list);
      for (std::string c; std::getline(in, c, ',');)
        if (!c.empty()) options.checks.push_back(c);
      const auto report = run_suite(load_catalog(catalog_name, ctx.config), options, ctx);
      const auto text = report_kind == "json" ? report_json(report) : report_text(report);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream(out_path) << text;
      }
      return report.fail ? Failures : Ok;
    };
  });

  auto* search = app.add_subcommand("search", "Counterexample searches");
  std::string what, search_catalog = "builtin";
  search->add_option("question", what)->required()->check(CLI::IsMember({"continuous"}));
  search->add_option("--catalog", search_catalog, "builtin or a file");
  search->callback([&] {
    action = [&] {
      int found = 0;
      for (const auto& r : search_continuous_transfer(load_catalog(search_catalog, ctx.config), ctx)) {
        std::cout << verdict_name(r.verdict) << "  " << r.instance << "  continuous=" << r.continuous;
        if (r.hull_continuous) std::cout << " hull_continuous=" << *r.hull_continuous;
        std::cout << "\n";
        if (r.verdict == Verdict::Fail) {
          std::cout << r.witness;
          ++found;
        }
      }
      std::cout << (found ? std::to_string(found) + " candidate(s) found\n" : "no candidate found\n");
      return found ? Failures : Ok;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : Usage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return Usage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Cap;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::UnknownCheck ? Usage : Failures;
  }
}
