#pragma once

// Homology of G ⋊ Z through the Wang sequence.  For a module M over the
// extension with Z-generator matrix T:
//   0 -> coker(θ_* - 1 | H_q(G;M)) -> H_q(G⋊Z;M) -> ker(θ_* - 1 | H_{q-1}(G;M)) -> 0
// where θ_* is induced by θ^-1 with module map T, and dually
//   0 -> coker(θ^* - 1 | H^{q-1}(G;M)) -> H^q(G⋊Z;M) -> ker(θ^* - 1 | H^q(G;M)) -> 0
// with θ^* the pullback along θ with module map T.  The first term is the
// "left" part, the last the "right" part.  When one of them vanishes the total
// group is the other; otherwise the total is extension-ambiguous and only the
// left part (a subgroup) is used.

#include "herbert/extension.hpp"
#include "herbert/homology.hpp"

namespace herbert {

struct ExtensionAmbiguous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WangResult {
  ZExtension extension;
  GModule module;
  std::size_t degree = 0;
  Variance variance = Variance::Homology;
  HomologyPtr fiber_top;   // H_q(G) or H^q(G)
  HomologyPtr fiber_prev;  // H_{q-1}(G) or H^{q-1}(G); null in degree 0
  HMap theta_top;
  std::optional<HMap> theta_prev;
  HomologyPtr left;   // coinvariant part, a quotient of fiber_top (homology) or fiber_prev (cohomology)
  HomologyPtr right;  // invariant part, a subgroup of fiber_prev (homology) or fiber_top (cohomology)

  bool resolved() const { return left->presentation().is_trivial() || right->presentation().is_trivial(); }
  /// The side the total group equals; left when both vanish.
  bool total_is_left() const { return right->presentation().is_trivial(); }
  HomologyPtr total() const {
    if (!resolved())
      throw ExtensionAmbiguous("extension-ambiguous: " + name() + " has nonzero coinvariant part " + left->to_string() +
                               " and invariant part " + right->to_string());
    return total_is_left() ? left : right;
  }
  std::string name() const {
    return std::string(variance == Variance::Homology ? "H_" : "H^") + std::to_string(degree) + "(" + extension.name() +
           "; " + module.name() + ")";
  }
  std::string total_string() const { return resolved() ? total()->to_string() : "ambiguous"; }
};

namespace detail {

inline HomologyPtr trivial_derived(std::size_t q, Variance v, const std::string& ctx) {
  return std::make_shared<const HomologyGroup>(Subquotient(IntMatrix(0, 0), IntMatrix(0, 0)), q, v, ctx);
}

inline IntMatrix minus_identity(const HMap& m) {
  IntMatrix a = m.matrix();
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= 1;
  return a;
}

inline HomologyPtr coker_part(const HMap& theta, std::size_t q, Variance v, const std::string& ctx) {
  return std::make_shared<const HomologyGroup>(cokernel_of(theta.source()->presentation(), minus_identity(theta)), q,
                                               v, ctx);
}
inline HomologyPtr ker_part(const HMap& theta, std::size_t q, Variance v, const std::string& ctx) {
  const auto& p = theta.source()->presentation();
  return std::make_shared<const HomologyGroup>(kernel_of(p, p, minus_identity(theta)), q, v, ctx);
}

inline IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector e(n);
  e[i] = 1;
  return e;
}

}  // namespace detail

/// θ_* on H_q(G; M) (homology) or θ^* on H^q(G; M) (cohomology).
inline HMap wang_theta(Engine& eng, const ZExtension& E, const GModule& M, const HomologyPtr& h) {
  const IntMatrix& T = M.theta_action();
  if (h->variance() == Variance::Homology)
    return induced_map(eng, E.theta().inverse().hom(), T, h, h, eng.seed(), "theta_*");
  return pullback_map(eng, E.theta().hom(), T, h, h, eng.seed(), "theta^*");
}

inline WangResult wang_sequence(Engine& eng, const ZExtension& E, const GModule& M, std::size_t q, Variance v) {
  if (!M.over_extension() || M.group() != E.fiber())
    throw GroupError("wang: module " + M.name() + " is not a module over " + E.name());
  WangResult w;
  w.extension = E;
  w.module = M;
  w.degree = q;
  w.variance = v;
  const GModule F = fiber_module(M);
  const std::string ctx = w.name();
  w.fiber_top = v == Variance::Homology ? eng.homology(E.fiber(), F, q) : eng.cohomology(E.fiber(), F, q);
  w.theta_top = wang_theta(eng, E, M, w.fiber_top);
  if (q > 0) {
    w.fiber_prev = v == Variance::Homology ? eng.homology(E.fiber(), F, q - 1) : eng.cohomology(E.fiber(), F, q - 1);
    w.theta_prev = wang_theta(eng, E, M, w.fiber_prev);
  }
  if (v == Variance::Homology) {
    w.left = detail::coker_part(w.theta_top, q, v, ctx + " coinvariants");
    w.right = q > 0 ? detail::ker_part(*w.theta_prev, q, v, ctx + " invariants")
                    : detail::trivial_derived(q, v, ctx + " invariants");
  } else {
    w.left = q > 0 ? detail::coker_part(*w.theta_prev, q, v, ctx + " coinvariants")
                   : detail::trivial_derived(q, v, ctx + " coinvariants");
    w.right = detail::ker_part(w.theta_top, q, v, ctx + " invariants");
  }
  return w;
}
inline WangResult wang_homology(Engine& eng, const ZExtension& E, const GModule& M, std::size_t q) {
  return wang_sequence(eng, E, M, q, Variance::Homology);
}
inline WangResult wang_cohomology(Engine& eng, const ZExtension& E, const GModule& M, std::size_t q) {
  return wang_sequence(eng, E, M, q, Variance::Cohomology);
}

/// Homology edge H_q(G) -> coinvariants (the map i_* onto the left part).
inline HMap wang_edge(const WangResult& w) {
  if (w.variance != Variance::Homology) throw std::invalid_argument("wang_edge: homology only");
  const std::size_t k = w.fiber_top->num_generators();
  IntMatrix m(w.left->num_generators(), k);
  for (std::size_t i = 0; i < k; ++i) m.set_col(i, w.left->classify(detail::unit_vector(k, i)));
  return HMap(w.fiber_top, w.left, std::move(m), "i_*");
}

/// i_* : H_q(G; M) -> H_q(G⋊Z; M).  Zero when the total is the invariant part.
inline HMap wang_induced(const WangResult& w) {
  auto tot = w.total();
  if (w.total_is_left()) return wang_edge(w);
  return HMap(w.fiber_top, tot, IntMatrix(tot->num_generators(), w.fiber_top->num_generators()), "i_*");
}

/// i^* : H^q(G⋊Z; M) -> H^q(G; M): the inclusion of the invariants, zero when
/// the total is the coinvariant part.
inline HMap wang_restriction(const WangResult& w) {
  if (w.variance != Variance::Cohomology) throw std::invalid_argument("wang_restriction: cohomology only");
  auto tot = w.total();
  const std::size_t k = tot->num_generators();
  IntMatrix m(w.fiber_top->num_generators(), k);
  if (!w.total_is_left())
    for (std::size_t i = 0; i < k; ++i)
      m.set_col(i, w.fiber_top->presentation().normalize(w.right->representative(detail::unit_vector(k, i))));
  return HMap(tot, w.fiber_top, std::move(m), "i^*");
}

/// Map on coinvariant parts induced by a fiber map f : H_q(A) -> H_q(B) that
/// intertwines the θ-actions (checked).
inline HMap wang_left_map(const WangResult& a, const WangResult& b, const HMap& f, std::string name) {
  if (a.variance != Variance::Homology || b.variance != Variance::Homology)
    throw std::invalid_argument("wang_left_map: homology only");
  if (f.source().get() != a.fiber_top.get() || f.target().get() != b.fiber_top.get())
    throw std::invalid_argument("wang_left_map: fiber map does not match the Wang data");
  if (!(compose(f, a.theta_top) == compose(b.theta_top, f)))
    throw std::logic_error("wang_left_map: " + name + " does not commute with the Z-actions");
  const std::size_t k = a.left->num_generators();
  IntMatrix m(b.left->num_generators(), k);
  for (std::size_t i = 0; i < k; ++i) {
    const IntVector x = a.left->representative(detail::unit_vector(k, i));
    m.set_col(i, b.left->classify(f.matrix() * x));
  }
  return HMap(a.left, b.left, std::move(m), std::move(name));
}

/// Map on invariant parts from a fiber map on the degree-(q-1) groups.
inline HMap wang_right_map(const WangResult& a, const WangResult& b, const HMap& f, std::string name) {
  if (a.variance != Variance::Homology || b.variance != Variance::Homology)
    throw std::invalid_argument("wang_right_map: homology only");
  if (!a.fiber_prev || !b.fiber_prev || f.source().get() != a.fiber_prev.get() || f.target().get() != b.fiber_prev.get())
    throw std::invalid_argument("wang_right_map: fiber map does not match the Wang data");
  if (!(compose(f, *a.theta_prev) == compose(*b.theta_prev, f)))
    throw std::logic_error("wang_right_map: " + name + " does not commute with the Z-actions");
  const std::size_t k = a.right->num_generators();
  IntMatrix m(b.right->num_generators(), k);
  for (std::size_t i = 0; i < k; ++i) {
    const IntVector x = a.right->representative(detail::unit_vector(k, i));
    m.set_col(i, b.right->classify(b.fiber_prev->presentation().normalize(f.matrix() * x)));
  }
  return HMap(a.right, b.right, std::move(m), std::move(name));
}

/// Map of total groups from fiber maps in degrees q and q-1.  The Wang
/// filtration is preserved, so coinvariants go to coinvariants; a map out of
/// an invariant part into a coinvariant part is not determined by these data.
inline HMap wang_total_map(const WangResult& a, const WangResult& b, const HMap& f_top, const std::optional<HMap>& f_prev,
                           std::string name) {
  auto ta = a.total(), tb = b.total();
  if (a.total_is_left()) {
    if (b.total_is_left()) return wang_left_map(a, b, f_top, std::move(name));
    return HMap(ta, tb, IntMatrix(tb->num_generators(), ta->num_generators()), std::move(name));
  }
  if (!b.total_is_left() || tb->presentation().is_trivial()) {
    if (tb->presentation().is_trivial())
      return HMap(ta, tb, IntMatrix(tb->num_generators(), ta->num_generators()), std::move(name));
    if (!f_prev) throw std::invalid_argument("wang_total_map: " + name + " needs the degree below");
    return wang_right_map(a, b, *f_prev, std::move(name));
  }
  throw ExtensionAmbiguous("extension-ambiguous: " + name + " from the invariant part of " + a.name() +
                           " into the coinvariant part of " + b.name());
}

// ---------------------------------------------------------------------------

/// Morphism of extensions on homology: fiber maps in degrees q and q-1.
inline HMap wang_extension_map(Engine& eng, const ExtensionHom& phi, const WangResult& a, const WangResult& b,
                               bool left_part_only = false) {
  const GroupHom& f = phi.fiber_map();
  const IntMatrix id = IntMatrix::identity(a.module.rank());
  HMap top = induced_map(eng, f, id, a.fiber_top, b.fiber_top, eng.seed(), f.name());
  if (left_part_only) return wang_left_map(a, b, top, f.name() + "_*");
  std::optional<HMap> prev;
  if (a.fiber_prev) prev = induced_map(eng, f, id, a.fiber_prev, b.fiber_prev, eng.seed(), f.name());
  return wang_total_map(a, b, top, prev, f.name() + "_*");
}

/// Transfer for a θ-invariant index-2 subgroup of the fiber.
inline HMap wang_transfer(Engine& eng, const ExtensionHom& inclusion, const WangResult& big, const WangResult& small,
                          bool left_part_only = false) {
  const GroupHom& f = inclusion.fiber_map();
  if (f.target()->order() != 2 * f.source()->order()) throw GroupError("wang_transfer: index is not 2");
  HMap top = transfer(eng, f, big.fiber_top, small.fiber_top, eng.seed());
  if (left_part_only) return wang_left_map(big, small, top, "transfer");
  std::optional<HMap> prev;
  if (big.fiber_prev) prev = transfer(eng, f, big.fiber_prev, small.fiber_prev, eng.seed());
  return wang_total_map(big, small, top, prev, "transfer");
}

/// Cap with a fiber class e ∈ H^p(G; N|G) that is θ^*-invariant (so it comes
/// from H^p(G⋊Z; N)).  `a` is the Wang data of H_n(G⋊Z; M) and `b` that of
/// H_{n-p}(G⋊Z; M⊗N).
inline HMap wang_cap(Engine& eng, const WangResult& a, const WangResult& b, const HClass& e, const GModule& N,
                     bool left_part_only = false, std::string name = "cap") {
  const std::size_t p = e.home->degree();
  if (b.degree + p != a.degree) throw std::invalid_argument("wang_cap: degrees do not match");
  const GModule MN = tensor(a.module, N);
  if (!fiber_module(MN).same_action(fiber_module(b.module)) || MN.theta_action() != b.module.theta_action())
    throw std::invalid_argument("wang_cap: target module is not M ⊗ N");
  auto inv = wang_theta(eng, a.extension, N, e.home);
  if (!(inv(e) == e)) throw std::logic_error("wang_cap: fiber class is not invariant under the Z-action");
  const GModule FMN = fiber_module(MN);
  auto same_target = [&](const HMap& m, const HomologyPtr& t) {
    if (m.target().get() != t.get()) throw std::logic_error("wang_cap: fiber groups were computed on different resolutions");
    return m;
  };
  HMap top = same_target(cap_map(eng, a.fiber_top, e, FMN, eng.seed(), name), b.fiber_top);
  if (left_part_only) return wang_left_map(a, b, top, name);
  std::optional<HMap> prev;
  if (a.fiber_prev && b.fiber_prev) prev = same_target(cap_map(eng, a.fiber_prev, e, FMN, eng.seed(), name), b.fiber_prev);
  return wang_total_map(a, b, top, prev, name);
}

}  // namespace herbert
