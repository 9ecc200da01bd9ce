#pragma once

// Named verification suites.  Each suite evaluates a list of claims through
// the engine and records computed and expected values as strings.

#include "herbert/catalog.hpp"
#include "herbert/wang.hpp"

#include <chrono>
#include <functional>
#include <set>

namespace herbert {

struct Claim {
  std::string id;
  std::string statement;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Claim> claims;
  double seconds = 0;
  bool pass() const {
    if (claims.empty()) return false;
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

/// Integer k in (-n/2, n/2] congruent to x mod n (x itself when n = 0).
inline Integer symmetric_residue(const Integer& x, const Integer& n) {
  if (n.is_zero()) return x;
  Integer r = mod_floor(x, n);
  if (2 * r > n) r -= n;
  return r;
}

/// "k" when the map is k times the identity, else the matrix.
inline std::string describe_map(const HMap& m) {
  const auto& sp = m.source()->presentation();
  const auto& tp = m.target()->presentation();
  if (sp.num_generators() == 0 || tp.num_generators() == 0) return "0";
  if (sp.to_string() == tp.to_string()) {
    const Integer k = m.matrix()(0, 0);
    bool scalar = true;
    for (std::size_t i = 0; i < m.matrix().rows(); ++i)
      for (std::size_t j = 0; j < m.matrix().cols(); ++j)
        if (mod_floor(m.matrix()(i, j) - (i == j ? k : Integer(0)), tp.modulus(i)) != 0) scalar = false;
    if (scalar) return symmetric_residue(k, tp.modulus(0)).str();
  }
  std::string s = "[";
  for (std::size_t i = 0; i < m.matrix().rows(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.matrix().cols(); ++j) s += (j ? "," : "") + m.matrix()(i, j).str();
    s += "]";
  }
  return s + "]";
}

inline std::string describe_classes(const std::vector<HClass>& xs) {
  std::set<std::string> seen;
  std::string s = "{";
  for (const auto& x : xs) {
    auto t = x.to_string();
    if (seen.insert(t).second) s += (seen.size() > 1 ? "," : "") + t;
  }
  return s + "}";
}

/// x lies in 2·A for the finite group A containing it.
inline bool is_even_class(const HClass& x) {
  for (const auto& y : all_elements(x.home))
    if (Integer(2) * y == x) return true;
  return false;
}

class Verifier {
 public:
  explicit Verifier(std::uint64_t seed = 0) : eng_(8, seed), seed_(seed) {}

  static const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{"reps",    "qEmbed", "groupIdentity", "lemma1a", "lemma1b",
                                              "lemma1c", "lemma1d", "tauQ",         "tauDiag", "corQ",
                                              "corDiagA", "corDiagB", "theorem3"};
    return ids;
  }
  static std::vector<std::string> dependencies(const std::string& id) {
    if (id == "theorem3") return {"corQ", "corDiagB", "lemma1d"};
    return {};
  }

  /// Runs a suite (and its dependencies first); results are memoized.
  const SuiteReport& run(const std::string& id) {
    if (auto it = done_.find(id); it != done_.end()) return it->second;
    const auto& ids = suite_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw std::invalid_argument("unknown suite '" + id + "'");
    std::vector<std::string> failed;
    for (const auto& d : dependencies(id))
      if (!run(d).pass()) failed.push_back(d);
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport r;
    r.suite = id;
    cur_ = &r;
    if (!failed.empty()) {
      std::string list;
      for (const auto& f : failed) list += (list.empty() ? "" : ",") + f;
      check("dependencies", "prerequisite suites pass", list + " failing", "all passing", false);
    } else {
      try {
        dispatch(id);
      } catch (const ResourceLimit&) {
        throw;
      } catch (const std::exception& ex) {
        check("internal", "suite completes", std::string("error: ") + ex.what(), "completed", false);
      }
    }
    cur_ = nullptr;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return done_[id] = std::move(r);
  }

  Engine& engine() { return eng_; }

 private:
  void check(std::string id, std::string statement, std::string computed, std::string expected, bool pass) {
    cur_->claims.push_back({std::move(id), std::move(statement), std::move(computed), std::move(expected), pass});
  }
  void check_eq(std::string id, std::string statement, std::string computed, std::string expected) {
    const bool ok = computed == expected;
    check(std::move(id), std::move(statement), std::move(computed), std::move(expected), ok);
  }
  void check_true(std::string id, std::string statement, bool ok, std::string computed = {}) {
    check(std::move(id), std::move(statement), computed.empty() ? (ok ? "true" : "false") : std::move(computed), "true",
          ok);
  }

  void dispatch(const std::string& id) {
    static const std::map<std::string, void (Verifier::*)()> table{
        {"reps", &Verifier::reps},         {"qEmbed", &Verifier::q_embed},     {"groupIdentity", &Verifier::group_identity},
        {"lemma1a", &Verifier::lemma1a},   {"lemma1b", &Verifier::lemma1b},    {"lemma1c", &Verifier::lemma1c},
        {"lemma1d", &Verifier::lemma1d},   {"tauQ", &Verifier::tau_q},         {"tauDiag", &Verifier::tau_diag},
        {"corQ", &Verifier::cor_q},        {"corDiagA", &Verifier::cor_diag_a}, {"corDiagB", &Verifier::cor_diag_b},
        {"theorem3", &Verifier::theorem3}};
    (this->*table.at(id))();
  }

  // ---- shared objects

  GModule ztw_power(const ZExtension& E, std::size_t k) { return tensor_power(sign_module(E), k); }
  HomologyPtr h(const GroupPtr& G, std::size_t q) { return eng_.homology(G, trivial_module(G), q); }
  HomologyPtr c(const GroupPtr& G, std::size_t q) { return eng_.cohomology(G, trivial_module(G), q); }
  HClass euler() { return euler_class_cyclic(eng_, catalog::rep_a()); }
  /// e_0: the degree-2 generator pulled back along the first projection.
  HClass e0() {
    auto pr = catalog::first_projection();
    return pullback_map(eng_, pr, c(catalog::z4(), 2), c(catalog::z4xz4(), 2), seed_)(euler());
  }
  HMap swap_pullback(std::size_t q) {
    auto H = c(catalog::z4xz4(), q);
    return pullback_map(eng_, catalog::swap_aut().hom(), H, H, seed_);
  }

  // ---- representation and group suites

  void reps() {
    for (const auto& rep : {catalog::rep_a(), catalog::rep_a2(), catalog::rep_q8(), catalog::rep_z4xz2()}) {
      auto rr = verify_matrix_rep(rep);
      std::string failing;
      for (const auto& ck : rr.checks)
        if (!ck.ok) failing += (failing.empty() ? "" : "; ") + ck.claim + " " + ck.detail;
      check_true("relations:" + rep.name, "the matrices of " + rep.name + " satisfy the defining relations", rr.ok(),
                 rr.ok() ? "all relations hold" : failing);
      if (!rr.ok()) continue;
      std::string det;
      for (const auto& [g, d] : rr.det_character) det += (det.empty() ? "" : ",") + g + ":" + std::to_string(d);
      check_true("det:" + rep.name, "determinant character of " + rep.name + " takes values ±1", true, det);
    }
    auto ra = verify_matrix_rep(catalog::rep_a());
    check_eq("rotation-weight:A", "b acts on the plane by a quarter turn (rotation weight)",
             ra.rotation_weight ? std::to_string(*ra.rotation_weight) : "none", "1");
    auto q = restrict_rep(catalog::rep_a2(), catalog::q8_in_w());
    auto qm = catalog::q8_matrices();
    check_true("restrict:Q8", "A[2] restricted to Q8 gives the displayed i, j matrices",
               q.generator_images == std::vector<IntMatrix>{qm[0], qm[1]});
    check_true("k=ij:Q8", "the displayed k matrix is the product of the i and j matrices", qm[0] * qm[1] == qm[2]);
    auto z = restrict_rep(catalog::rep_a2(), catalog::z4xz2_in_w());
    check_true("restrict:Z4xZ2", "A[2] restricted to Z4xZ2 gives the displayed matrices",
               z.generator_images == catalog::rep_z4xz2().generator_images);
  }

  void q_embed() {
    const auto& f = catalog::q8_in_w();
    const auto& Q = f.source();
    const auto& W = f.target();
    check_true("injective", "Q8 -> (Z4xZ4)⋊Z2 is an injective homomorphism", f.injective());
    const Element i = Q->generators()[0].element, j = Q->generators()[1].element, k = Q->mul(i, j);
    check_eq("image:i", "i maps to ((1,-1),0)", W->label(f(i)), W->label(catalog::w_elem(1, -1, 0)));
    check_eq("image:j", "j maps to ((1,1),1)", W->label(f(j)), W->label(catalog::w_elem(1, 1, 1)));
    check_eq("image:k", "k = ij maps to the product of the images", W->label(f(k)), W->label(W->mul(f(i), f(j))));
    std::set<Element> units{i, j, Q->inv(i), Q->inv(j)};
    check_true("k-new", "k = ij has order 4 and differs from ±i, ±j",
               Q->element_order(k) == 4 && !units.count(k) && !units.count(Q->inv(k)));
    check_true("ij=-ji", "ij = (ji)^-1", k == Q->inv(Q->mul(j, i)));
    auto via_q = compose(f, catalog::z4_in_q8());
    auto via_t = compose(catalog::z4xz4_in_w(), catalog::z4_antidiagonal());
    check_true("antidiagonal", "<i> ⊂ Q8 ⊂ W equals the antidiagonal Z4 ⊂ Z4xZ4 ⊂ W", via_q.images() == via_t.images());
    auto diag = compose(catalog::z4xz4_in_w(), catalog::z4_diagonal());
    auto via_d = compose(catalog::z4xz2_in_w(), catalog::z4_in_z4xz2());
    check_true("diagonal", "Z4 ⊂ Z4xZ2 ⊂ W equals the diagonal Z4 ⊂ Z4xZ4 ⊂ W", diag.images() == via_d.images());
  }

  void group_identity() {
    const auto& W = catalog::w();
    const GroupAut theta = catalog::w_theta();
    const GroupAut swap = conjugation_aut(W, catalog::w_elem(0, 0, 1));
    check_true("commute:W", "the Z-generator and the Z2-swap act by commuting automorphisms", theta.commutes_with(swap));
    const GroupAut inv = catalog::z4xz4_ext().theta();
    const GroupAut sw = catalog::swap_aut();
    check_true("commute:Z4xZ4", "inversion and swap commute on Z4xZ4", inv.commutes_with(sw));
    check_eq("orders", "orders of the two automorphisms of Z4xZ4",
             std::to_string(inv.order()) + "," + std::to_string(sw.order()), "2,2");
    std::set<std::vector<Element>> generated{identity_hom(catalog::z4xz4()).images()};
    for (bool grew = true; grew;) {
      grew = false;
      for (auto cur : std::vector<std::vector<Element>>(generated.begin(), generated.end()))
        for (const auto* a : {&inv, &sw}) {
          std::vector<Element> next(cur.size());
          for (Element x = 0; x < next.size(); ++x) next[x] = (*a)(cur[x]);
          grew |= generated.insert(next).second;
        }
    }
    check_eq("fiber-order", "order of (Z4xZ4) ⋊ <inversion, swap>", std::to_string(16 * generated.size()), "64");
    check_true("theta-fixes-t", "the Z-generator fixes the swap element t", theta(catalog::w_elem(0, 0, 1)) == catalog::w_elem(0, 0, 1));
  }

  // ---- Z4⋊Z groups, the twisted module and caps with e

  void lemma1a() {
    const auto& E = catalog::z4_ext();
    check_true("restrict:Ztw", "Ztw restricted to the fiber Z4 is the trivial module",
               fiber_module(sign_module(E)).same_action(trivial_module(E.fiber())));
    check_true("square:Ztw", "Ztw ⊗ Ztw is the trivial module over Z4⋊Z",
               ztw_power(E, 2).same_action(trivial_module(E)));
    auto inv = E.theta().inverse().hom();
    for (std::size_t q : {1u, 3u, 5u, 7u}) {
      auto H = h(E.fiber(), q);
      auto m = induced_map(eng_, inv, H, H, seed_);
      check_eq("action:H" + std::to_string(q), "the Z-generator acts on H_" + std::to_string(q) + "(Z4; Z)",
               describe_map(m), q % 4 == 1 ? "-1" : "1");
    }
  }

  void wang_iso_claims(std::size_t q, const GModule& M, const std::string& mod) {
    const auto& E = catalog::z4_ext();
    auto w = wang_homology(eng_, E, M, q);
    const std::string tag = "H" + std::to_string(q) + "(" + mod + ")";
    check_eq("coinvariants:" + tag, "coinvariant part of H_" + std::to_string(q) + "(Z4⋊Z; " + mod + ")",
             w.left->to_string(), "Z/4");
    check_eq("invariants:" + tag, "invariant part from degree " + std::to_string(q - 1), w.right->to_string(), "0");
    check_eq("total:" + tag, "H_" + std::to_string(q) + "(Z4⋊Z; " + mod + ")", w.total_string(), "Z/4");
    if (w.resolved()) check_true("iso:" + tag, "i_* : H_" + std::to_string(q) + "(Z4) -> total is an isomorphism", wang_induced(w).is_iso());
  }

  void lemma1b() {
    for (std::size_t m : {0u, 1u}) wang_iso_claims(4 * m + 1, sign_module(catalog::z4_ext()), "Ztw");
  }
  void lemma1c() {
    for (std::size_t m : {0u, 1u}) wang_iso_claims(4 * m + 3, trivial_module(catalog::z4_ext()), "Z");
  }

  void lemma1d() {
    const auto& E = catalog::z4_ext();
    const GModule tw = sign_module(E), zz = trivial_module(E);
    auto w2 = wang_cohomology(eng_, E, tw, 2);
    check_eq("H2:total", "H^2(Z4⋊Z; Ztw)", w2.total_string(), "Z/4");
    if (w2.resolved()) check_true("H2:restriction-iso", "i^* : H^2(Z4⋊Z; Ztw) -> H^2(Z4; Z) is an isomorphism", wang_restriction(w2).is_iso());
    const HClass e = euler();
    check_eq("euler:order", "order of the Euler class of A restricted to Z4", order_of(e).str(), "4");
    check_true("euler:invariant", "the Euler class is fixed by the Z-action with Ztw coefficients",
               wang_theta(eng_, E, tw, e.home)(e) == e);
    auto h5 = wang_homology(eng_, E, tw, 5), h3 = wang_homology(eng_, E, zz, 3), h1 = wang_homology(eng_, E, tw, 1);
    auto c53 = wang_cap(eng_, h5, h3, e, tw, false, "cap e");
    auto c31 = wang_cap(eng_, h3, h1, e, tw, false, "cap e");
    check_true("cap:5->3", "∩e : H_5(Z4⋊Z; Ztw) -> H_3(Z4⋊Z; Z) is an isomorphism", c53.is_iso(), describe_map(c53));
    check_true("cap:3->1", "∩e : H_3(Z4⋊Z; Z) -> H_1(Z4⋊Z; Ztw) is an isomorphism", c31.is_iso(), describe_map(c31));
    auto neg53 = compose(scalar_map(h3.total(), -1), c53), neg31 = compose(scalar_map(h1.total(), -1), c31);
    check_true("negcap:5->3", "-∩e : H_5 -> H_3 is an isomorphism", neg53.is_iso(), describe_map(neg53));
    check_true("negcap:3->1", "-∩e : H_3 -> H_1 is an isomorphism", neg31.is_iso(), describe_map(neg31));
    auto f53 = cap_map(eng_, h5.fiber_top, e, fiber_module(h3.module));
    auto f31 = cap_map(eng_, h3.fiber_top, e, fiber_module(h1.module));
    check_true("naturality:5->3", "i_* ∘ (fiber ∩e) = (∩e) ∘ i_* from H_5(Z4)",
               compose(wang_induced(h3), f53) == compose(c53, wang_induced(h5)));
    check_true("naturality:3->1", "i_* ∘ (fiber ∩e) = (∩e) ∘ i_* from H_3(Z4)",
               compose(wang_induced(h1), f31) == compose(c31, wang_induced(h3)));
    const HClass ee = cup(eng_, e, e, trivial_module(E.fiber()), seed_);
    check_eq("e2:order", "order of e ∪ e in H^4(Z4; Z)", order_of(ee).str(), "4");
    for (std::size_t q : {5u, 7u}) {
      bool ok = true;
      for (const auto& x : all_elements(h(E.fiber(), q)))
        ok = ok && cap(eng_, x, ee, trivial_module(E.fiber()), seed_) ==
                       cap(eng_, cap(eng_, x, e, trivial_module(E.fiber()), seed_), e, trivial_module(E.fiber()), seed_);
      check_true("e2:iterated:H" + std::to_string(q), "x ∩ (e∪e) = (x ∩ e) ∩ e on H_" + std::to_string(q) + "(Z4; Z)", ok);
    }
  }

  static Integer order_of(const HClass& x) {
    Integer k = 1;
    HClass y = x;
    while (!y.is_zero()) {
      y = y + x;
      k += 1;
      if (k > 4096) return 0;
    }
    return k;
  }

  // ---- deck transformations

  void tau_q() {
    auto Q = catalog::q8();
    const Element j = Q->generators()[1].element;
    auto deck = restrict_aut(conjugation_aut(Q, j), catalog::z4_in_q8());
    check_true("deck=inversion", "conjugation by j on <i> is inversion",
               deck.hom().images() == inversion_aut(catalog::z4()).hom().images());
    auto Z4 = catalog::z4();
    auto m1 = induced_map(eng_, deck.hom(), h(Z4, 1), h(Z4, 1), seed_);
    check_eq("tau_*:H1", "τ_* on H_1(Z4; Z)", describe_map(m1), "-1");
    auto m2 = pullback_map(eng_, deck.hom(), c(Z4, 2), c(Z4, 2), seed_);
    check_eq("tau^*:H2", "τ^* on H^2(Z4; Z)", describe_map(m2), "-1");
    // the deck of the Q-cover is the swap on Z4xZ4 read through the antidiagonal
    auto I1 = catalog::z4_antidiagonal();
    check_true("swap∘I1=I1∘deck", "swap ∘ antidiag = antidiag ∘ τ", compose(catalog::swap_aut().hom(), I1).images() == compose(I1, deck.hom()).images());
    auto restrict1 = pullback_map(eng_, I1, c(catalog::z4xz4(), 2), c(Z4, 2), seed_);
    const HClass eq = restrict1(e0());
    const HClass t_eq = restrict1(swap_pullback(2)(e0()));
    check_eq("e_Q", "e_Q = antidiag^*(e_0) equals the Euler class", eq.to_string(), euler().to_string());
    check_eq("tau^*(e_Q)", "τ^*(e_Q) = -e_Q", t_eq.to_string(), (-eq).to_string());
  }

  void tau_diag() {
    auto G = catalog::z4xz2();
    const Element t = G->generators()[1].element;
    auto deck = restrict_aut(conjugation_aut(G, t), catalog::z4_in_z4xz2());
    auto Z4 = catalog::z4();
    check_true("deck=id", "conjugation by t on the diagonal Z4 is the identity",
               deck.hom().images() == identity_hom(Z4).images());
    for (std::size_t q = 1; q <= 5; ++q) {
      check_eq("tau_*:H" + std::to_string(q), "τ_* on H_" + std::to_string(q) + "(Z4; Z)",
               describe_map(induced_map(eng_, deck.hom(), h(Z4, q), h(Z4, q), seed_)),
               q % 2 ? "1" : "0");
      check_eq("tau^*:H^" + std::to_string(q), "τ^* on H^" + std::to_string(q) + "(Z4; Z)",
               describe_map(pullback_map(eng_, deck.hom(), c(Z4, q), c(Z4, q), seed_)), q % 2 ? "0" : "1");
    }
    auto I2 = catalog::z4_diagonal();
    check_true("swap∘I2=I2", "swap ∘ diag = diag", compose(catalog::swap_aut().hom(), I2).images() == I2.images());
    auto restrict2 = pullback_map(eng_, I2, c(catalog::z4xz4(), 2), c(Z4, 2), seed_);
    const HClass ed = restrict2(e0());
    check_eq("tau^*(e_diag)", "τ^*(e_diag) = e_diag", restrict2(swap_pullback(2)(e0())).to_string(), ed.to_string());
    // the Wang-level deck of the sub-extension acts by the identity
    const auto& E = catalog::z4_ext();
    ExtensionHom deck_ext(E, E, deck.hom());
    for (std::size_t k : {0u, 1u})
      for (std::size_t q = 0; q <= 5; ++q) {
        auto w = wang_homology(eng_, E, ztw_power(E, k), q);
        auto m = wang_extension_map(eng_, deck_ext, w, w, !w.resolved());
        const std::string tag = "H" + std::to_string(q) + "(" + (k ? "Ztw" : "Z") + ")";
        check_eq("wang-tau:" + tag, "τ_* on " + std::string(w.resolved() ? "" : "the coinvariant part of ") + w.name(),
                 m.source()->num_generators() ? describe_map(m) : "1", "1");
      }
  }

  // ---- cap sign rules and evenness of transfers

  /// For a map I : Z4 -> Z4xZ4 checks x ∩ τ^*e_0 = sign · x ∩ e_0 for every x in the image.
  void cap_sign_claims(const GroupHom& I, int sign, const std::string& name) {
    auto Z4 = catalog::z4(), Z44 = catalog::z4xz4();
    const HClass e = e0(), te = swap_pullback(2)(e0());
    const std::string rel = sign < 0 ? "x ∩ τ^*e_0 = -(x ∩ e_0)" : "x ∩ τ^*e_0 = x ∩ e_0";
    for (std::size_t q : {3u, 5u}) {
      auto push = induced_map(eng_, I, h(Z4, q), h(Z44, q), seed_);
      bool ok = true, nontrivial = false;
      std::vector<HClass> values;
      for (const auto& u : all_elements(h(Z4, q))) {
        const HClass x = push(u);
        const HClass a = cap(eng_, x, te, trivial_module(Z44), seed_), b = cap(eng_, x, e, trivial_module(Z44), seed_);
        ok = ok && a == Integer(sign) * b;
        nontrivial = nontrivial || !b.is_zero();
        values.push_back(b);
      }
      const std::string tag = "H" + std::to_string(q);
      check_true("finite:" + tag, rel + " for all x = " + name + "_*(u), u ∈ H_" + std::to_string(q) + "(Z4; Z)", ok);
      check_true("nonvanishing:" + tag, "x ∩ e_0 takes nonzero values", nontrivial, describe_classes(values));
    }
    // the same on the coinvariant parts over the Z-extensions
    const auto& Es = catalog::z4_ext();
    const auto& Eb = catalog::z4xz4_ext();
    ExtensionHom Ibar(Es, Eb, I);
    for (std::size_t q : {3u, 5u})
      for (std::size_t k : {0u, 1u}) {
        auto ws = wang_homology(eng_, Es, ztw_power(Es, k), q);
        auto wb = wang_homology(eng_, Eb, ztw_power(Eb, k), q);
        auto wt = wang_homology(eng_, Eb, ztw_power(Eb, k + 1), q - 2);
        auto push = wang_extension_map(eng_, Ibar, ws, wb, true);
        auto c0 = wang_cap(eng_, wb, wt, e, sign_module(Eb), true, "cap e0");
        auto c1 = wang_cap(eng_, wb, wt, te, sign_module(Eb), true, "cap τ*e0");
        bool ok = true;
        for (const auto& u : all_elements(ws.left)) {
          const HClass x = push(u);
          ok = ok && c1(x) == Integer(sign) * c0(x);
        }
        const std::string tag = "H" + std::to_string(q) + "(" + (k ? "Ztw" : "Z") + ")";
        check_true("wang:" + tag, rel + " on coinvariant classes x = " + name + "_*(u) in " + wb.name(), ok);
      }
  }

  void cor_q() { cap_sign_claims(catalog::z4_antidiagonal(), -1, "antidiag"); }
  void cor_diag_a() { cap_sign_claims(catalog::z4_diagonal(), 1, "diag"); }

  void cor_diag_b() {
    auto Z4 = catalog::z4(), G = catalog::z4xz2();
    const auto& pi = catalog::z4_in_z4xz2();
    const auto& s = catalog::z4xz2_to_z4();
    check_true("s∘π=id", "s ∘ π = id on Z4", compose(s, pi).images() == identity_hom(Z4).images());
    for (std::size_t q : {1u, 3u, 5u}) {
      auto tr = transfer(eng_, pi, h(G, q), h(Z4, q), seed_);
      auto sp = compose(induced_map(eng_, s, h(G, q), h(Z4, q), seed_), induced_map(eng_, pi, h(Z4, q), h(G, q), seed_));
      const std::string tag = "H" + std::to_string(q);
      check_eq("s_*π_*:" + tag, "s_* π_* on H_" + std::to_string(q) + "(Z4; Z)", describe_map(sp), "1");
      auto img = tr.image();
      bool even = true;
      for (const auto& y : img) even = even && is_even_class(y);
      check_true("transfer-even:" + tag, "every element of the transfer image in H_" + std::to_string(q) + "(Z4; Z) is even",
                 even, describe_classes(img));
    }
    const auto& Eb = catalog::z4xz2_ext();
    const auto& Es = catalog::z4_ext();
    ExtensionHom incl(Es, Eb, pi);
    for (std::size_t q : {1u, 3u, 5u})
      for (std::size_t k : {0u, 1u}) {
        auto wb = wang_homology(eng_, Eb, ztw_power(Eb, k), q);
        auto ws = wang_homology(eng_, Es, ztw_power(Es, k), q);
        auto tr = wang_transfer(eng_, incl, wb, ws, true);
        auto img = tr.image();
        bool even = true;
        for (const auto& y : img) even = even && is_even_class(y);
        const std::string tag = "H" + std::to_string(q) + "(" + (k ? "Ztw" : "Z") + ")";
        check_true("wang-transfer-even:" + tag, "transfer image in the coinvariant part of " + ws.name() + " is even", even,
                   describe_classes(img));
      }
  }

  // ---- final deduction

  void theorem3() {
    auto Z4 = catalog::z4(), Z44 = catalog::z4xz4(), Z42 = catalog::z4xz2();
    const HClass e = euler();
    const HClass ee = cup(eng_, e, e, trivial_module(Z4), seed_);
    const std::size_t q = 7;
    auto pr = catalog::first_projection();
    auto pr7 = induced_map(eng_, pr, h(Z44, q), h(Z4, q), seed_);
    // u = pr_*(x) ∩ e² over x = antidiag_*(v)
    auto push1 = induced_map(eng_, catalog::z4_antidiagonal(), h(Z4, q), h(Z44, q), seed_);
    std::vector<HClass> us, ws;
    for (const auto& v : all_elements(h(Z4, q))) us.push_back(cap(eng_, pr7(push1(v)), ee, trivial_module(Z4), seed_));
    // w = pr_*(y) ∩ e² over y = diag_*(transfer(z))
    auto push2 = induced_map(eng_, catalog::z4_diagonal(), h(Z4, q), h(Z44, q), seed_);
    auto tr = transfer(eng_, catalog::z4_in_z4xz2(), h(Z42, q), h(Z4, q), seed_);
    for (const auto& z : all_elements(h(Z42, q))) ws.push_back(cap(eng_, pr7(push2(tr(z))), ee, trivial_module(Z4), seed_));
    check_eq("u-range", "values of u = pr_*(x) ∩ e² in H_3(Z4; Z)", describe_classes(us), "{(0),(1),(2),(3)}");
    bool w_even = true;
    for (const auto& w : ws) w_even = w_even && is_even_class(w);
    check_true("w-even", "values of w = pr_*(y) ∩ e² are even", w_even, describe_classes(ws));

    // enumeration over u ∈ Z4 and even w ∈ Z4
    std::vector<std::pair<int, int>> admissible;
    bool chain_ok = true;
    for (int u = 0; u < 4; ++u)
      for (int w : {0, 2}) {
        const bool premise = (u + w) % 4 == ((4 - u) + w) % 4;
        if (!premise) continue;
        admissible.emplace_back(u, w);
        chain_ok = chain_ok && (2 * u) % 4 == 0 && (u == 0 || u == 2) && (u + w) % 2 == 0;
      }
    std::string adm;
    for (const auto& [u, w] : admissible) adm += (adm.empty() ? "" : ",") + std::string("(") + std::to_string(u) + "," + std::to_string(w) + ")";
    check_eq("admissible", "pairs (u, w) with u + w = -u + w, w even", adm, "(0,0),(0,2),(2,0),(2,2)");
    check_true("deduction", "u + w = -u + w implies 2u = 0, u ∈ {0,2} and u + w even", chain_ok);
    bool odd_excluded = true;
    for (const auto& [u, w] : admissible) odd_excluded = odd_excluded && u % 2 == 0;
    check_true("u-odd-excluded", "odd u never satisfies the premise", odd_excluded);

    // the class maps to u + w under two caps with e, which are isomorphisms of Z4
    const auto& E = catalog::z4_ext();
    auto h5 = wang_homology(eng_, E, sign_module(E), 5), h3 = wang_homology(eng_, E, trivial_module(E), 3),
         h1 = wang_homology(eng_, E, sign_module(E), 1);
    auto twice = compose(wang_cap(eng_, h3, h1, e, sign_module(E)), wang_cap(eng_, h5, h3, e, sign_module(E)));
    bool even = twice.is_iso();
    std::set<std::string> candidates;
    for (const auto& x : all_elements(twice.source())) {
      const HClass y = twice(x);
      const int val = static_cast<int>(to_ll(y.coords.at(0)));
      for (const auto& [u, w] : admissible)
        if ((u + w) % 4 == val) {
          candidates.insert(x.to_string());
          even = even && is_even_class(x);
        }
    }
    std::string cand;
    for (const auto& s : candidates) cand += (cand.empty() ? "" : ",") + s;
    check_true("eta-even", "every class whose double cap is an admissible u + w is even", even, "{" + cand + "}");
    check_eq("verdict", "conclusion", even && chain_ok && w_even ? "η_*[N] even" : "not established", "η_*[N] even");
  }

  Engine eng_;
  std::uint64_t seed_;
  std::map<std::string, SuiteReport> done_;
  SuiteReport* cur_ = nullptr;
};

}  // namespace herbert
