#pragma once

// JSON and text rendering of suite reports and computed groups, and an on-disk
// cache for generic resolutions.

#include "herbert/suites.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>

namespace herbert {

using Json = nlohmann::json;

// nlohmann::json keeps object keys sorted, so dump() is canonical.
inline std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json to_json(const Claim& c) {
  return Json{{"id", c.id}, {"statement", c.statement}, {"computed", c.computed}, {"expected", c.expected},
              {"verdict", c.pass ? "pass" : "fail"}};
}

inline Json to_json(const SuiteReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(to_json(c));
  return Json{{"suite", r.suite}, {"claims", claims}, {"verdict", r.pass() ? "pass" : "fail"}};
}

inline Json reports_json(const std::vector<SuiteReport>& rs, std::uint64_t seed) {
  Json suites = Json::array();
  bool ok = !rs.empty();
  for (const auto& r : rs) {
    suites.push_back(to_json(r));
    ok = ok && r.pass();
  }
  return Json{{"seed", seed}, {"suites", suites}, {"verdict", ok ? "pass" : "fail"}};
}

/// Pads each column to its widest cell.
inline std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  auto cells = [](const std::string& s) {
    // display width: count code points, not bytes
    std::size_t n = 0;
    for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
    return n;
  };
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], cells(r[i]));
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - cells(r[i]) + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

inline std::string reports_text(const std::vector<SuiteReport>& rs) {
  std::ostringstream os;
  for (const auto& r : rs) {
    os << "[" << (r.pass() ? "PASS" : "FAIL") << "] " << r.suite << " (" << std::fixed << std::setprecision(3)
       << r.seconds << " s)\n";
    std::vector<std::vector<std::string>> rows{{"verdict", "claim", "computed", "expected", "statement"}};
    for (const auto& c : r.claims) rows.push_back({c.pass ? "pass" : "FAIL", c.id, c.computed, c.expected, c.statement});
    std::istringstream table(text_table(rows));
    for (std::string line; std::getline(table, line);) os << "  " << line << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Resolution cache: one JSON file per (group spec, builder, length, seed).

class ResolutionCache {
 public:
  explicit ResolutionCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const std::string& spec, std::size_t length, std::uint64_t seed) const {
    const std::string key = spec + "|generic|" + std::to_string(length) + "|" + std::to_string(seed);
    std::ostringstream name;
    name << "resolution-" << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
    return dir_ / name.str();
  }

  /// A validated cached resolution, or nullptr on a miss or a bad file.
  ResolutionPtr load(const std::string& spec, const GroupPtr& G, std::size_t length, std::uint64_t seed) const {
    std::ifstream in(path_for(spec, length, seed));
    if (!in) return nullptr;
    try {
      Json j = Json::parse(in);
      if (j.at("group") != spec || j.at("builder") != "generic" || j.at("length") != length || j.at("seed") != seed ||
          j.at("order") != G->order())
        return nullptr;
      std::vector<std::vector<Chain>> bd(length + 1);
      const auto& deg = j.at("boundaries");
      if (deg.size() != length + 1) return nullptr;
      for (std::size_t q = 1; q <= length; ++q)
        for (const auto& col : deg[q]) {
          Chain c;
          for (const auto& term : col) c[term.at(0).get<std::size_t>()] = Integer(term.at(1).get<std::string>());
          bd[q].push_back(std::move(c));
        }
      auto R = std::make_shared<GenericResolution>(G, std::move(bd));
      if (!check_resolution(*R).ok()) return nullptr;
      return R;
    } catch (const std::exception&) {
      return nullptr;
    }
  }

  void store(const std::string& spec, const GenericResolution& R, std::uint64_t seed) const {
    std::filesystem::create_directories(dir_);
    Json deg = Json::array();
    for (std::size_t q = 0; q <= R.length(); ++q) {
      Json cols = Json::array();
      if (q > 0)
        for (const auto& c : R.boundaries()[q]) {
          Json terms = Json::array();
          for (const auto& [k, v] : c) terms.push_back(Json::array({k, v.str()}));
          cols.push_back(terms);
        }
      deg.push_back(cols);
    }
    Json ranks = Json::array();
    for (std::size_t q = 0; q <= R.length(); ++q) ranks.push_back(R.rank(q));
    Json j{{"group", spec},     {"builder", "generic"}, {"length", R.length()}, {"seed", seed},
           {"order", R.order()}, {"ranks", ranks},      {"boundaries", deg}};
    // write then rename so concurrent readers never see a partial file
    const auto target = path_for(spec, R.length(), seed);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&R));
    {
      std::ofstream out(tmp);
      if (!out) throw std::runtime_error("cannot write resolution cache file " + tmp.string());
      out << j.dump();
    }
    std::filesystem::rename(tmp, target);
  }

  /// Installs a resolution of G of at least this length into the engine,
  /// through the cache when G needs the generic builder.
  ResolutionPtr prepare(Engine& eng, const std::string& spec, const GroupPtr& G, std::size_t length) const {
    if (G->cyclic_generator() || G->factors()) return eng.resolution(G, length);
    if (auto R = load(spec, G, length, eng.seed())) {
      eng.set_resolution(G, R);
      return R;
    }
    auto R = make_resolution(G, length);
    if (auto gen = std::dynamic_pointer_cast<const GenericResolution>(R)) store(spec, *gen, eng.seed());
    eng.set_resolution(G, R);
    return R;
  }

 private:
  static std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::filesystem::path dir_;
};

}  // namespace herbert
