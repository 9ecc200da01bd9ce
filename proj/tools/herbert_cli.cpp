// herbert: compute group (co)homology and replay the verification suites.
//
//   herbert compute --group Z4⋊Z --module Ztw --degree 5
//   herbert verify --suite all --format json
//   herbert replay-theorem3
//
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 resource limit.

#include "herbert/catalog.hpp"
#include "herbert/report.hpp"
#include "herbert/wang.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace herbert;
namespace cat = herbert::catalog;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string cache_dir;
  std::uint64_t seed = 0;
  std::string group, module = "Z", suite;
  std::size_t degree = 0;
  bool cohomology = false;
};

std::optional<ResolutionCache> open_cache(const Options& o) {
  std::string dir = o.cache_dir;
  if (const char* env = std::getenv("HERBERT_CACHE"); env && *env) dir = env;
  if (dir.empty()) return std::nullopt;
  return ResolutionCache(dir);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string strip_parens(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

/// "<finite spec>⋊Z" (or "_sd_Z"): the named extensions, else inversion on an abelian fiber.
std::optional<ZExtension> parse_extension(const std::string& spec) {
  std::string base;
  for (const std::string suffix : {"⋊Z", "_sd_Z"})
    if (ends_with(spec, suffix)) base = strip_parens(spec.substr(0, spec.size() - suffix.size()));
  if (base.empty()) return std::nullopt;
  if (base == "Z4") return cat::z4_ext();
  if (base == "Z4xZ2") return cat::z4xz2_ext();
  if (base == "Z4xZ4") return cat::z4xz4_ext();
  if (base == "Z4xZ4_sd_Z2" || base == "(Z4xZ4)⋊Z2") return cat::w_ext();
  auto G = build_group(base);
  if (!G->is_abelian()) throw GroupError("no default Z-action on the non-abelian group '" + base + "'");
  return ZExtension(inversion_aut(G), spec);
}

Json group_json(const HomologyGroup& h) {
  const auto& p = h.presentation();
  Json gens = Json::array();
  for (std::size_t i = 0; i < p.num_generators(); ++i) {
    IntVector e(p.num_generators());
    e[i] = 1;
    Json rep = Json::array();
    for (const auto& x : h.representative(e)) rep.push_back(x.str());
    gens.push_back(Json{{"order", p.modulus(i).is_zero() ? "infinite" : p.modulus(i).str()}, {"representative", rep}});
  }
  Json factors = Json::array();
  for (const auto& d : p.invariant_factors) factors.push_back(d.str());
  return Json{{"group", p.to_string()}, {"invariant_factors", factors}, {"free_rank", p.free_rank}, {"generators", gens}};
}

int cmd_compute(const Options& o) {
  std::optional<ZExtension> E;
  GroupPtr G;
  try {
    E = parse_extension(o.group);
    G = E ? E->fiber() : build_group(o.group);
  } catch (const GroupError& ex) {
    throw UsageError(ex.what());
  }
  GModule M = [&] {
    try {
      return module_by_name(o.module, G, E);
    } catch (const GroupError& ex) {
      throw UsageError(ex.what());
    }
  }();
  Engine eng(8, o.seed);
  if (auto cache = open_cache(o)) cache->prepare(eng, E ? o.group + "|fiber" : o.group, G, o.degree + 1);

  const std::string kind = o.cohomology ? "cohomology" : "homology";
  Json out{{"command", "compute"}, {"group", o.group}, {"module", o.module}, {"degree", o.degree}, {"kind", kind}};
  std::string name;
  if (E) {
    auto w = o.cohomology ? wang_cohomology(eng, *E, M, o.degree) : wang_homology(eng, *E, M, o.degree);
    name = w.name();
    out["left"] = group_json(*w.left);
    out["right"] = group_json(*w.right);
    out["resolved"] = w.resolved();
    out["result"] = w.resolved() ? group_json(*w.total()) : Json(nullptr);
  } else {
    auto h = o.cohomology ? eng.cohomology(G, M, o.degree) : eng.homology(G, M, o.degree);
    name = h->context();
    out["result"] = group_json(*h);
    out["resolved"] = true;
  }
  out["name"] = name;

  if (o.format == "json") {
    std::cout << canonical_dump(out);
    return kPass;
  }
  std::vector<std::vector<std::string>> rows{{"group", "value"}};
  auto describe = [](const Json& g) {
    std::string s = g["group"].get<std::string>();
    std::string gens;
    for (const auto& x : g["generators"]) {
      std::string rep;
      for (const auto& c : x["representative"]) rep += (rep.empty() ? "" : ",") + c.get<std::string>();
      gens += (gens.empty() ? "" : " ") + std::string("[") + rep + "]";
    }
    return gens.empty() ? s : s + "  generated by " + gens;
  };
  if (E) {
    rows.push_back({"coinvariant part", describe(out["left"])});
    rows.push_back({"invariant part", describe(out["right"])});
  }
  rows.push_back({name, out["resolved"] ? out["result"]["group"].get<std::string>()
                                        : "0 -> " + out["left"]["group"].get<std::string>() + " -> H -> " +
                                              out["right"]["group"].get<std::string>() + " -> 0, extension not determined"});
  if (!E) rows.back()[1] = describe(out["result"]);
  std::cout << text_table(rows);
  return kPass;
}

int emit_reports(const Options& o, const std::vector<SuiteReport>& rs, const std::string& extra = {}) {
  bool ok = !rs.empty();
  for (const auto& r : rs) ok = ok && r.pass();
  if (o.format == "json") {
    std::cout << canonical_dump(reports_json(rs, o.seed));
  } else {
    std::cout << reports_text(rs) << extra;
    std::cout << (ok ? "all suites pass" : "verification FAILED") << "\n";
  }
  return ok ? kPass : kFail;
}

// Q8 is the one generic resolution the suites touch
void use_cache(const Options& o, Verifier& ver) {
  if (auto cache = open_cache(o)) cache->prepare(ver.engine(), "Q8", cat::q8(), 8);
}

int cmd_verify(const Options& o) {
  const auto& ids = Verifier::suite_ids();
  std::vector<std::string> wanted;
  if (o.suite == "all") wanted = ids;
  else if (std::find(ids.begin(), ids.end(), o.suite) != ids.end()) wanted = {o.suite};
  else throw UsageError("unknown suite '" + o.suite + "'");
  Verifier ver(o.seed);
  use_cache(o, ver);
  std::vector<SuiteReport> rs;
  for (const auto& id : wanted) rs.push_back(ver.run(id));
  return emit_reports(o, rs);
}

int cmd_replay(const Options& o) {
  Verifier ver(o.seed);
  use_cache(o, ver);
  std::vector<SuiteReport> rs;
  for (const auto& d : Verifier::dependencies("theorem3")) rs.push_back(ver.run(d));
  rs.push_back(ver.run("theorem3"));
  std::string verdict;
  for (const auto& c : rs.back().claims)
    if (c.id == "verdict") verdict = c.computed;
  return emit_reports(o, rs, verdict.empty() ? "" : "conclusion: " + verdict + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"exact group (co)homology and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", o.cache_dir, "directory for cached resolutions (HERBERT_CACHE overrides)");
  app.add_option("--seed", o.seed, "pivot seed for chain-map lifts");

  auto* compute = app.add_subcommand("compute", "homology or cohomology of a group with coefficients");
  compute->add_option("--group", o.group, "group spec, e.g. Z4, Q8, Product(Cyclic(4),Cyclic(2)), Z4⋊Z")->required();
  compute->add_option("--module", o.module, "Z, Ztw or Ztw^k")->capture_default_str();
  compute->add_option("--degree", o.degree, "degree q")->required();
  compute->add_flag("--cohomology", o.cohomology, "compute cohomology instead of homology");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", o.suite, "suite id or 'all'")->required();

  auto* replay = app.add_subcommand("replay-theorem3", "replay the final deduction and its prerequisite suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*compute) return cmd_compute(o);
    if (*verify) return cmd_verify(o);
    if (*replay) return cmd_replay(o);
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const ResourceLimit& ex) {
    std::cerr << "resource limit: " << ex.what() << "\n";
    return kBudget;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kFail;
  }
  return kUsage;
}
