// Acceptance run: one line per criterion, nonzero exit if any fails.

#include "herbert/catalog.hpp"
#include "herbert/report.hpp"
#include "herbert/wang.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include <sys/wait.h>

#ifndef HERBERT_CLI
#error "HERBERT_CLI must name the command-line binary"
#endif

using namespace herbert;
namespace cat = herbert::catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void suites_pass(Verifier& ver, Outcome& out, std::initializer_list<const char*> ids) {
  for (const char* id : ids) {
    const auto& r = ver.run(id);
    for (const auto& c : r.claims)
      out.require(c.pass, std::string(id) + "/" + c.id + ": got " + c.computed + ", want " + c.expected);
  }
}

// Multiset of prime-power orders (0 stands for a free summand).
std::multiset<long> primary_parts(const std::vector<long>& cyclic_orders) {
  std::multiset<long> parts;
  for (long n : cyclic_orders) {
    if (n == 0) {
      parts.insert(0);
      continue;
    }
    for (long p = 2; n > 1; ++p) {
      long q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1) parts.insert(q);
    }
  }
  return parts;
}

std::vector<long> cyclic_orders(const HomologyGroup& h) {
  std::vector<long> v;
  for (const auto& d : h.presentation().invariant_factors) v.push_back(static_cast<long>(d));
  for (std::size_t i = 0; i < h.presentation().free_rank; ++i) v.push_back(0);
  return v;
}

Outcome criterion1(Engine& eng) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  auto G = cat::z4();
  for (std::size_t q = 1; q <= 7; ++q) {
    const std::string got = eng.homology(G, trivial_module(G), q)->to_string();
    const std::string want = q % 2 ? "Z/4" : "0";
    out.require(got == want, "H_" + std::to_string(q) + " = " + got);
  }
  const double s = seconds_since(t0);
  out.require(s < 1.0, "took " + std::to_string(s) + " s");
  return out;
}

Outcome criterion2(Engine& eng) {
  Outcome out;
  auto G = cat::z4();
  const auto theta = cat::z4_ext().theta().hom();
  const std::map<std::size_t, int> want{{1, -1}, {3, 1}, {5, -1}, {7, 1}};
  for (const auto& [q, k] : want) {
    auto h = eng.homology(G, trivial_module(G), q);
    out.require(induced_map(eng, theta, h, h) == scalar_map(h, k), "degree " + std::to_string(q));
  }
  return out;
}

Outcome criterion3(Engine& eng, Verifier& ver) {
  Outcome out;
  const auto& E = cat::z4_ext();
  for (std::size_t m : {0u, 1u}) {
    auto b = wang_homology(eng, E, sign_module(E), 4 * m + 1);
    out.require(b.total()->to_string() == "Z/4" && wang_induced(b).is_iso(), "twisted degree " + std::to_string(4 * m + 1));
    auto c = wang_homology(eng, E, trivial_module(E), 4 * m + 3);
    out.require(c.total()->to_string() == "Z/4" && wang_induced(c).is_iso(), "trivial degree " + std::to_string(4 * m + 3));
  }
  suites_pass(ver, out, {"lemma1b", "lemma1c"});
  return out;
}

Outcome criterion4(Engine& eng, Verifier& ver) {
  Outcome out;
  const auto& E = cat::z4_ext();
  const auto tw = sign_module(E);
  auto h2 = wang_cohomology(eng, E, tw, 2);
  out.require(h2.total()->to_string() == "Z/4" && wang_restriction(h2).is_iso(), "restriction on H^2");
  auto e = euler_class_cyclic(eng, cat::rep_a());
  out.require(e.home->to_string() == "Z/4" && gcd(e.coords[0], Integer(4)) == 1, "e generates");
  auto h5 = wang_homology(eng, E, tw, 5);
  auto h3 = wang_homology(eng, E, tensor(tw, tw), 3);
  auto h1 = wang_homology(eng, E, tensor(tensor(tw, tw), tw), 1);
  out.require(h3.total()->to_string() == "Z/4" && wang_cap(eng, h5, h3, e, tw).is_iso(), "cap 5 -> 3");
  out.require(h1.total()->to_string() == "Z/4" && wang_cap(eng, h3, h1, e, tw).is_iso(), "cap 3 -> 1");
  suites_pass(ver, out, {"lemma1a", "lemma1d"});
  return out;
}

Outcome criterion9(Engine& eng) {
  Outcome out;
  // Smith normal form against determinantal divisors
  std::mt19937 rng(20260917);
  int agree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = oracle::random_matrix(rng);
    auto s = smith_normal_form(a);
    const bool ok = s.P * a * s.Q == s.D && oracle::is_diagonal(s.D) && is_unimodular(s.P) && is_unimodular(s.Q) &&
                    s.diagonal() == oracle::invariant_factors_by_minors(a);
    agree += ok;
  }
  out.require(agree == 200, "smith agreement " + std::to_string(agree) + "/200");

  // every resolution the engine emits is a resolution
  std::vector<ResolutionPtr> emitted;
  for (const auto& G : {cat::z2(), cat::z4(), cat::z4xz2(), cat::q8(), cat::z4xz4()}) emitted.push_back(make_resolution(G, 8));
  emitted.push_back(make_resolution(cat::w(), 3));
  emitted.push_back(std::make_shared<GenericResolution>(cat::z4(), 7));
  emitted.push_back(std::make_shared<GenericResolution>(cat::z4xz2(), 6));
  emitted.push_back(std::make_shared<RestrictedResolution>(make_resolution(cat::q8(), 6), cat::z4_in_q8()));
  for (const auto& R : emitted) out.require(check_resolution(*R).ok(), "exactness of " + R->builder() + " for " + R->group()->name());

  // builder independence on Z4
  {
    auto G = cat::z4();
    auto gen = std::make_shared<GenericResolution>(G, 7);
    for (std::size_t q = 0; q <= 6; ++q)
      for (auto v : {Variance::Homology, Variance::Cohomology}) {
        HomologyGroup a(gen, trivial_module(G), q, v);
        auto b = v == Variance::Homology ? eng.homology(G, trivial_module(G), q) : eng.cohomology(G, trivial_module(G), q);
        out.require(a.to_string() == b->to_string(), "builders disagree in degree " + std::to_string(q));
      }
  }

  // two pivot seeds give the same induced maps
  {
    auto G = cat::z4();
    const auto theta = cat::z4_ext().theta().hom();
    const auto deck = restrict_aut(conjugation_aut(cat::q8(), cat::q8()->element("j")), cat::z4_in_q8()).hom();
    for (std::size_t q = 1; q <= 7; ++q) {
      auto h = eng.homology(G, trivial_module(G), q);
      out.require(induced_map(eng, theta, h, h, 0) == induced_map(eng, theta, h, h, 1), "lift seeds, theta");
      out.require(induced_map(eng, deck, h, h, 0) == induced_map(eng, deck, h, h, 5), "lift seeds, deck");
    }
  }

  // transfer identities for the index-2 pairs
  struct Pair {
    GroupHom incl;
    Element outside;
    std::size_t top;
  };
  const std::vector<Pair> pairs{{cat::z4_in_q8(), cat::q8()->element("j"), 5},
                                {cat::z4_in_z4xz2(), cat::z4xz2()->element("(0,1)"), 5},
                                {cat::z4xz4_in_w(), cat::w_elem(0, 0, 1), 2}};
  for (const auto& [incl, g, top] : pairs) {
    const auto& H = incl.source();
    const auto& G = incl.target();
    for (std::size_t q = 1; q <= top; ++q) {
      auto hg = eng.homology(G, trivial_module(G), q);
      auto hh = eng.homology(H, trivial_module(H), q);
      auto tr = transfer(eng, incl, hg, hh);
      auto inc = induced_map(eng, incl, hh, hg);
      const auto deck = restrict_aut(conjugation_aut(G, g), incl).hom();
      const std::string where = H->name() + " in " + G->name() + " degree " + std::to_string(q);
      out.require(compose(inc, tr) == scalar_map(hg, 2), "inclusion after transfer, " + where);
      out.require(compose(tr, inc) == add(scalar_map(hh, 1), induced_map(eng, deck, hh, hh)),
                  "transfer after inclusion, " + where);
    }
  }

  // Kunneth for Z4 x Z2, on both the tensor and the generic resolution
  {
    auto A = cat::z4(), B = cat::z2(), G = cat::z4xz2();
    auto generic = std::make_shared<GenericResolution>(G, 6);
    for (std::size_t n = 0; n <= 5; ++n) {
      std::vector<long> expect;
      auto gcd_l = [](long a, long b) { return std::gcd(a, b); };
      for (std::size_t i = 0; i <= n; ++i)
        for (long a : cyclic_orders(*eng.homology(A, trivial_module(A), i)))
          for (long b : cyclic_orders(*eng.homology(B, trivial_module(B), n - i)))
            expect.push_back(a == 0 ? b : b == 0 ? a : gcd_l(a, b));
      for (std::size_t i = 0; i + 1 <= n; ++i)
        for (long a : cyclic_orders(*eng.homology(A, trivial_module(A), i)))
          for (long b : cyclic_orders(*eng.homology(B, trivial_module(B), n - 1 - i)))
            if (a && b) expect.push_back(gcd_l(a, b));
      const auto want = primary_parts(expect);
      out.require(primary_parts(cyclic_orders(*eng.homology(G, trivial_module(G), n))) == want,
                  "kunneth degree " + std::to_string(n));
      HomologyGroup g(generic, trivial_module(G), n, Variance::Homology);
      out.require(primary_parts(cyclic_orders(g)) == want, "kunneth (generic) degree " + std::to_string(n));
    }
  }

  // (x ∩ c1) ∩ c2 = x ∩ (c1 ∪ c2)
  for (const auto& G : {cat::z4(), cat::z4xz2()}) {
    const auto Z = trivial_module(G);
    std::vector<HClass> cls;
    for (std::size_t p : {1u, 2u}) {
      auto c = eng.cohomology(G, Z, p);
      for (std::size_t i = 0; i < c->num_generators(); ++i) cls.push_back(HClass::generator(c, i));
    }
    for (std::size_t n : {3u, 4u, 5u}) {
      auto h = eng.homology(G, Z, n);
      for (std::size_t i = 0; i < h->num_generators(); ++i)
        for (const auto& c1 : cls)
          for (const auto& c2 : cls) {
            if (c1.home->degree() + c2.home->degree() > n) continue;
            const HClass x = HClass::generator(h, i);
            out.require(cap(eng, cap(eng, x, c1, Z), c2, Z) == cap(eng, x, cup(eng, c1, c2, Z), Z),
                        "cap/cup on " + G->name() + " degree " + std::to_string(n));
          }
    }
  }
  return out;
}

/// Runs a command and returns its standard output and exit status.
std::pair<std::string, int> run(const std::string& cmd) {
  std::string text;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {"", -1};
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) text.append(buf, n);
  const int status = pclose(p);
  return {text, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

Outcome criterion10() {
  Outcome out;
  const std::string cmd = std::string("\"") + HERBERT_CLI + "\" verify --suite all --format json";
  auto [first, rc1] = run(cmd);
  auto [second, rc2] = run(cmd);
  out.require(rc1 == 0 && rc2 == 0, "exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2));
  out.require(!first.empty() && first == second, "outputs differ");
  try {
    out.require(canonical_dump(Json::parse(first)) == first, "json does not round-trip");
  } catch (const std::exception& ex) {
    out.require(false, std::string("unparsable json: ") + ex.what());
  }
  return out;
}

}  // namespace

int main() {
  Engine eng;
  Verifier ver;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"H_q(Z4; Z) is Z/4 in odd and 0 in even degrees 1..7", [&] { return criterion1(eng); }},
      {"the Z-generator acts by -1, 1, -1, 1 on H_1, H_3, H_5, H_7 of Z4", [&] { return criterion2(eng); }},
      {"twisted H_{4m+1} and trivial H_{4m+3} of Z4⋊Z are Z/4 via the fiber", [&] { return criterion3(eng, ver); }},
      {"restriction on H^2 and both caps with e are isomorphisms", [&] { return criterion4(eng, ver); }},
      {"deck actions: -1 for the quaternion cover, identity for the diagonal cover",
       [&] {
         Outcome o;
         suites_pass(ver, o, {"tauQ", "tauDiag"});
         return o;
       }},
      {"cap sign rules for both covers and evenness of the transfer image",
       [&] {
         Outcome o;
         suites_pass(ver, o, {"corQ", "corDiagA", "corDiagB"});
         return o;
       }},
      {"final deduction concludes η_*[N] even",
       [&] {
         Outcome o;
         const auto t0 = std::chrono::steady_clock::now();
         suites_pass(ver, o, {"theorem3"});
         std::string verdict;
         for (const auto& c : ver.run("theorem3").claims)
           if (c.id == "verdict") verdict = c.computed;
         o.require(verdict == "η_*[N] even", "verdict '" + verdict + "'");
         o.require(seconds_since(t0) < 1.0, "too slow");
         return o;
       }},
      {"representation tables, quaternion embedding and the order-64 identity",
       [&] {
         Outcome o;
         suites_pass(ver, o, {"reps", "qEmbed", "groupIdentity"});
         return o;
       }},
      {"property checks against independent oracles", [&] { return criterion9(eng); }},
      {"two runs of verify --suite all --format json are byte-identical", [] { return criterion10(); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.require(false, std::string("error: ") + ex.what());
    }
    failed += !o.pass;
    std::printf("criterion %2zu: %s  %s (%.3f s)%s%s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(t0), o.pass ? "" : "\n    ", o.detail.c_str());
  }
  std::printf("%s\n", failed ? "acceptance FAILED" : "all criteria pass");
  return failed ? 1 : 0;
}
