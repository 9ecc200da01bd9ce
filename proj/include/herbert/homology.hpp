#pragma once

// Homology H_q(G; M) = H_q(M ⊗_G R) and cohomology H^q(G; M) = H^q(Hom_G(R, M))
// with canonical (Smith) coordinates.  Chain-level vectors have index j*rank(M)+a
// for generator e_j of R_q and basis vector a of M.  In M ⊗_G R we use
// m ⊗ g·e_j = g^-1·m ⊗ e_j; a cochain c is determined by the values c(e_j).

#include "herbert/chain_map.hpp"
#include "herbert/module.hpp"
#include "herbert/subquotient.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>
#include <memory>
#include <string>

namespace herbert {

enum class Variance { Homology, Cohomology };

/// ∂_q on M ⊗_G R_q; rows rank(q-1)*r, columns rank(q)*r.
inline IntMatrix tensor_boundary(const Resolution& R, const GModule& M, std::size_t q) {
  const std::size_t r = M.rank(), n = R.order();
  if (q == 0) return IntMatrix(0, R.rank(0) * r);
  IntMatrix d(R.rank(q - 1) * r, R.rank(q) * r);
  for (std::size_t j = 0; j < R.rank(q); ++j)
    for (const auto& [k, v] : R.boundary(q, j)) {
      const IntMatrix& g_inv = M.act(R.group()->inv(static_cast<Element>(k % n)));
      const std::size_t i = k / n;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) d(i * r + a, j * r + b) += v * g_inv(a, b);
    }
  return d;
}

/// δ^q on Hom_G(R_q, M), (δc)(e_j) = c(d e_j); rows rank(q+1)*r, columns rank(q)*r.
inline IntMatrix cochain_coboundary(const Resolution& R, const GModule& M, std::size_t q) {
  const std::size_t r = M.rank(), n = R.order();
  IntMatrix d(R.rank(q + 1) * r, R.rank(q) * r);
  for (std::size_t j = 0; j < R.rank(q + 1); ++j)
    for (const auto& [k, v] : R.boundary(q + 1, j)) {
      const IntMatrix& g = M.act(static_cast<Element>(k % n));
      const std::size_t i = k / n;
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) d(j * r + a, i * r + b) += v * g(a, b);
    }
  return d;
}

class HomologyGroup {
 public:
  HomologyGroup(ResolutionPtr R, GModule M, std::size_t q, Variance v, std::string context = {})
      : res_(std::move(R)), module_(std::move(M)), degree_(q), variance_(v), context_(std::move(context)) {
    if (module_.group() != res_->group()) throw GroupError("homology: module and resolution are over different groups");
    if (q + 1 > res_->length()) throw ResourceLimit("homology: degree " + std::to_string(q) + " needs a longer resolution");
    const std::size_t dim = res_->rank(q) * module_.rank();
    IntMatrix out, in;
    if (v == Variance::Homology) {
      out = tensor_boundary(*res_, module_, q);
      in = tensor_boundary(*res_, module_, q + 1);
    } else {
      out = cochain_coboundary(*res_, module_, q);
      in = q == 0 ? IntMatrix(dim, 0) : cochain_coboundary(*res_, module_, q - 1);
    }
    outgoing_ = out;
    IntMatrix cycles = out.rows() == 0 ? IntMatrix::identity(dim) : kernel_basis(out);
    sq_ = Subquotient(cycles, in);
    if (context_.empty()) context_ = std::string(v == Variance::Homology ? "H_" : "H^") + std::to_string(q) + "(" +
                                     res_->group()->name() + "; " + module_.name() + ")";
  }

  /// A group computed from others: L / N inside the canonical coordinates of
  /// some computed group (no chain complex behind it).
  HomologyGroup(Subquotient sq, std::size_t q, Variance v, std::string context)
      : degree_(q), variance_(v), context_(std::move(context)), sq_(std::move(sq)), derived_(true) {}

  bool derived() const { return derived_; }
  const ResolutionPtr& resolution() const { return res_; }
  const GModule& module() const { return module_; }
  const GroupPtr& group() const { return module_.group(); }
  std::size_t degree() const { return degree_; }
  Variance variance() const { return variance_; }
  const std::string& context() const { return context_; }
  const AbelianPresentation& presentation() const { return sq_.presentation(); }
  const Subquotient& subquotient() const { return sq_; }
  std::size_t num_generators() const { return sq_.num_generators(); }
  std::size_t chain_dim() const { return derived_ ? sq_.ambient() : res_->rank(degree_) * module_.rank(); }
  std::string to_string() const { return presentation().to_string(); }

  /// A chain-level (co)cycle representing the class with these coordinates.
  IntVector representative(const IntVector& coords) const { return sq_.lift(coords); }
  /// Canonical coordinates of a (co)cycle.
  IntVector classify(const IntVector& cycle) const {
    if (cycle.size() != chain_dim()) throw std::invalid_argument("classify: chain has the wrong dimension");
    if (outgoing_.rows() && !is_zero_vector(outgoing_ * cycle))
      throw std::logic_error("classify: chain is not a " + std::string(variance_ == Variance::Homology ? "cycle" : "cocycle") +
                             " in " + context_);
    return sq_.coords_or_throw(cycle);
  }

 private:
  static bool is_zero_vector(const IntVector& v) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  ResolutionPtr res_;
  GModule module_;
  std::size_t degree_;
  Variance variance_;
  std::string context_;
  IntMatrix outgoing_;
  Subquotient sq_;
  bool derived_ = false;
};

using HomologyPtr = std::shared_ptr<const HomologyGroup>;

/// An element of a computed group, in canonical coordinates.
struct HClass {
  HomologyPtr home;
  IntVector coords;

  HClass() = default;
  HClass(HomologyPtr h, IntVector c) : home(std::move(h)), coords(home->presentation().normalize(std::move(c))) {
    if (coords.size() != home->num_generators()) throw std::invalid_argument("HClass: wrong number of coordinates");
  }
  static HClass zero(HomologyPtr h) {
    const std::size_t k = h->num_generators();
    return HClass(std::move(h), IntVector(k));
  }
  static HClass generator(HomologyPtr h, std::size_t i) {
    IntVector c(h->num_generators());
    c.at(i) = 1;
    return HClass(std::move(h), std::move(c));
  }
  bool is_zero() const {
    for (const auto& x : coords)
      if (!x.is_zero()) return false;
    return true;
  }
  friend HClass operator+(const HClass& a, const HClass& b) {
    IntVector c = a.coords;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
    return HClass(a.home, std::move(c));
  }
  friend HClass operator*(const Integer& k, const HClass& a) {
    IntVector c = a.coords;
    for (auto& x : c) x *= k;
    return HClass(a.home, std::move(c));
  }
  HClass operator-() const { return Integer(-1) * *this; }
  friend bool operator==(const HClass& a, const HClass& b) { return a.coords == b.coords; }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + coords[i].str();
    return s + ")";
  }
};

/// All elements of a finite computed group.
inline std::vector<HClass> all_elements(const HomologyPtr& h) {
  const auto& p = h->presentation();
  if (!p.is_finite()) throw std::invalid_argument("all_elements: group is infinite");
  std::vector<HClass> out;
  IntVector c(p.num_generators());
  while (true) {
    out.emplace_back(h, c);
    std::size_t i = 0;
    while (i < c.size()) {
      c[i] += 1;
      if (c[i] < p.modulus(i)) break;
      c[i] = 0;
      ++i;
    }
    if (i == c.size()) break;
  }
  return out;
}

/// Homomorphism between computed groups in canonical coordinates.
class HMap {
 public:
  HMap() = default;
  HMap(HomologyPtr source, HomologyPtr target, IntMatrix matrix, std::string name = {})
      : src_(std::move(source)), tgt_(std::move(target)), m_(std::move(matrix)), name_(std::move(name)) {
    if (m_.rows() != tgt_->num_generators() || m_.cols() != src_->num_generators())
      throw std::invalid_argument("HMap: matrix shape does not match the groups");
    normalize();
    // well-defined: d_i * column i vanishes in the target
    const auto& sp = src_->presentation();
    for (std::size_t i = 0; i < sp.invariant_factors.size(); ++i) {
      IntVector c = m_.col(i);
      for (auto& x : c) x *= sp.invariant_factors[i];
      if (tgt_->presentation().normalize(c) != IntVector(c.size()))
        throw std::logic_error("HMap " + name_ + ": not well defined on generator " + std::to_string(i));
    }
  }
  const HomologyPtr& source() const { return src_; }
  const HomologyPtr& target() const { return tgt_; }
  const IntMatrix& matrix() const { return m_; }
  const std::string& name() const { return name_; }

  HClass operator()(const HClass& x) const { return HClass(tgt_, m_ * x.coords); }
  friend bool operator==(const HMap& a, const HMap& b) { return a.m_ == b.m_; }

  bool injective() const { return kernel_of(src_->presentation(), tgt_->presentation(), m_).presentation().is_trivial(); }
  bool surjective() const { return cokernel_of(tgt_->presentation(), m_).presentation().is_trivial(); }
  bool is_iso() const { return injective() && surjective(); }
  Subquotient kernel() const { return kernel_of(src_->presentation(), tgt_->presentation(), m_); }
  /// Image elements (finite targets).
  std::vector<HClass> image() const {
    std::vector<HClass> out;
    for (const auto& x : all_elements(src_)) {
      HClass y = (*this)(x);
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
  }

 private:
  void normalize() {
    const auto& tp = tgt_->presentation();
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j) m_(i, j) = mod_floor(m_(i, j), tp.modulus(i));
  }

  HomologyPtr src_, tgt_;
  IntMatrix m_;
  std::string name_;
};

/// a after b.
inline HMap compose(const HMap& a, const HMap& b) {
  if (a.source().get() != b.target().get()) throw std::invalid_argument("compose: groups do not match");
  return HMap(b.source(), a.target(), a.matrix() * b.matrix(), a.name() + "∘" + b.name());
}
inline HMap scalar_map(const HomologyPtr& h, const Integer& k, std::string name = {}) {
  return HMap(h, h, k * IntMatrix::identity(h->num_generators()), std::move(name));
}
inline HMap add(const HMap& a, const HMap& b) {
  return HMap(a.source(), a.target(), a.matrix() + b.matrix(), a.name() + "+" + b.name());
}

// ---------------------------------------------------------------------------
// Engine: caches resolutions, diagonals and groups.

class Engine {
 public:
  explicit Engine(std::size_t preferred_length = 8, std::uint64_t seed = 0)
      : preferred_(preferred_length), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  ResolutionPtr resolution(const GroupPtr& G, std::size_t min_length) {
    auto it = res_.find(G.get());
    if (it != res_.end() && it->second->length() >= min_length) return it->second;
    // generic resolutions of larger groups grow fast; build those only as far as asked
    const bool cheap = G->cyclic_generator() || G->factors() || G->order() <= 16;
    auto R = make_resolution(G, std::max(min_length, cheap ? std::min(preferred_, kMaxResolutionLength) : min_length));
    set_resolution(G, R);
    return R;
  }
  void set_resolution(const GroupPtr& G, ResolutionPtr R) {
    res_[G.get()] = R;
    keep_.push_back(G);
    keep_res_.push_back(std::move(R));
  }

  HomologyPtr homology(const GroupPtr& G, const GModule& M, std::size_t q) { return group(G, M, q, Variance::Homology); }
  HomologyPtr cohomology(const GroupPtr& G, const GModule& M, std::size_t q) {
    return group(G, M, q, Variance::Cohomology);
  }
  /// Same module and variance on the same resolution, another degree.
  HomologyPtr shifted(const HomologyPtr& h, std::size_t q, const GModule& M) {
    return group_on(h->resolution(), M, q, h->variance());
  }
  HomologyPtr group_on(const ResolutionPtr& R, const GModule& M, std::size_t q, Variance v) {
    const std::string key = cache_key(R.get(), M, q, v);
    auto it = groups_.find(key);
    if (it != groups_.end()) return it->second;
    auto h = std::make_shared<const HomologyGroup>(R, M, q, v);
    groups_[key] = h;
    return h;
  }

  const DiagonalApprox& diagonal(const ResolutionPtr& R, std::size_t length, std::uint64_t seed) {
    auto key = std::make_tuple(R.get(), seed);
    auto it = diag_.find(key);
    if (it != diag_.end() && it->second.map.length() >= length) return it->second;
    return diag_[key] = diagonal_approx(R, std::min(R->length(), std::max(length, std::size_t(1))), seed);
  }
  const ChainMap& lift(const GroupHom& phi, const ResolutionPtr& src, const ResolutionPtr& tgt, std::size_t length,
                       std::uint64_t seed) {
    auto key = std::make_tuple(src.get(), tgt.get(), phi.images(), seed);
    auto it = lifts_.find(key);
    if (it != lifts_.end() && it->second.length() >= length) return it->second;
    return lifts_[key] = lift_chain_map(phi, src, tgt, length, seed);
  }

 private:
  HomologyPtr group(const GroupPtr& G, const GModule& M, std::size_t q, Variance v) {
    return group_on(resolution(G, q + 1), M, q, v);
  }
  static std::string cache_key(const void* R, const GModule& M, std::size_t q, Variance v) {
    std::ostringstream os;
    os << R << '|' << q << '|' << (v == Variance::Homology ? 'h' : 'c') << '|' << M.rank();
    for (Element g = 0; g < M.group()->order(); ++g) os << '|' << M.act(g);
    return os.str();
  }

  std::size_t preferred_;
  std::uint64_t seed_;
  std::map<const FiniteGroup*, ResolutionPtr> res_;
  std::vector<GroupPtr> keep_;
  std::vector<ResolutionPtr> keep_res_;
  std::map<std::string, HomologyPtr> groups_;
  std::map<std::tuple<const Resolution*, std::uint64_t>, DiagonalApprox> diag_;
  std::map<std::tuple<const Resolution*, const Resolution*, std::vector<Element>, std::uint64_t>, ChainMap> lifts_;
};

// ---------------------------------------------------------------------------
// Induced maps

/// Image under a chain map f over phi of a chain in M ⊗ (source of f), with a
/// module map alpha : M -> N; m ⊗ e_j goes to sum c·g^-1·alpha(m) ⊗ e_i over
/// the terms c·g·e_i of f(e_j).
inline IntVector push_chain(const ChainMap& f, std::size_t q, const IntMatrix& alpha, const GModule& N,
                            const IntVector& z) {
  const std::size_t r = alpha.cols(), s = N.rank(), n = f.target->order();
  IntVector w(f.target->rank(q) * s);
  for (std::size_t j = 0; j < f.source->rank(q); ++j) {
    IntVector m(r);
    bool nz = false;
    for (std::size_t a = 0; a < r; ++a) {
      m[a] = z[j * r + a];
      nz = nz || !m[a].is_zero();
    }
    if (!nz) continue;
    const IntVector am = alpha * m;
    for (const auto& [k, v] : f.images[q][j]) {
      const IntVector x = N.act(f.target->group()->inv(static_cast<Element>(k % n))) * am;
      const std::size_t l = k / n;
      for (std::size_t b = 0; b < s; ++b) w[l * s + b] += v * x[b];
    }
  }
  return w;
}

/// phi_* : H_q(H; M) -> H_q(G; M') for alpha : M -> M' with alpha·h = phi(h)·alpha.
inline HMap induced_map(Engine& eng, const GroupHom& phi, const IntMatrix& alpha, const HomologyPtr& src,
                        const HomologyPtr& tgt, std::uint64_t seed = 0, std::string name = {}) {
  if (src->variance() != Variance::Homology || tgt->variance() != Variance::Homology || src->degree() != tgt->degree())
    throw std::invalid_argument("induced_map: need homology groups of equal degree");
  if (phi.source() != src->group() || phi.target() != tgt->group())
    throw std::invalid_argument("induced_map: homomorphism does not match the groups");
  const GModule &M = src->module(), &N = tgt->module();
  if (alpha.rows() != N.rank() || alpha.cols() != M.rank()) throw std::invalid_argument("induced_map: module map shape");
  for (const auto& h : phi.source()->generators())
    if (alpha * M.act(h.element) != N.act(phi(h.element)) * alpha)
      throw GroupError("induced_map: module map is not compatible with the homomorphism");
  const std::size_t q = src->degree();
  const ChainMap& f = eng.lift(phi, src->resolution(), tgt->resolution(), q, seed);
  IntMatrix mat(tgt->num_generators(), src->num_generators());
  for (std::size_t i = 0; i < src->num_generators(); ++i) {
    IntVector e(src->num_generators());
    e[i] = 1;
    mat.set_col(i, tgt->classify(push_chain(f, q, alpha, N, src->representative(e))));
  }
  return HMap(src, tgt, std::move(mat), std::move(name));
}

/// phi^* : H^q(G; M') -> H^q(H; M) for beta : M' -> M with beta·phi(h) = h·beta.
inline HMap pullback_map(Engine& eng, const GroupHom& phi, const IntMatrix& beta, const HomologyPtr& src,
                         const HomologyPtr& tgt, std::uint64_t seed = 0, std::string name = {}) {
  if (src->variance() != Variance::Cohomology || tgt->variance() != Variance::Cohomology || src->degree() != tgt->degree())
    throw std::invalid_argument("pullback_map: need cohomology groups of equal degree");
  if (phi.target() != src->group() || phi.source() != tgt->group())
    throw std::invalid_argument("pullback_map: homomorphism does not match the groups");
  const GModule &Mp = src->module(), &M = tgt->module();
  if (beta.rows() != M.rank() || beta.cols() != Mp.rank()) throw std::invalid_argument("pullback_map: module map shape");
  for (const auto& h : phi.source()->generators())
    if (beta * Mp.act(phi(h.element)) != M.act(h.element) * beta)
      throw GroupError("pullback_map: module map is not compatible with the homomorphism");
  const std::size_t q = src->degree(), r = Mp.rank(), s = M.rank();
  const ChainMap& f = eng.lift(phi, tgt->resolution(), src->resolution(), q, seed);
  const std::size_t n = src->group()->order();
  IntMatrix mat(tgt->num_generators(), src->num_generators());
  for (std::size_t i = 0; i < src->num_generators(); ++i) {
    IntVector e(src->num_generators());
    e[i] = 1;
    const IntVector c = src->representative(e);
    IntVector w(tgt->chain_dim());
    for (std::size_t j = 0; j < tgt->resolution()->rank(q); ++j) {
      IntVector acc(r);
      for (const auto& [k, v] : f.images[q][j]) {
        const std::size_t l = k / n;
        IntVector cl(r);
        for (std::size_t a = 0; a < r; ++a) cl[a] = c[l * r + a];
        const IntVector x = Mp.act(static_cast<Element>(k % n)) * cl;
        for (std::size_t a = 0; a < r; ++a) acc[a] += v * x[a];
      }
      const IntVector y = beta * acc;
      for (std::size_t b = 0; b < s; ++b) w[j * s + b] = y[b];
    }
    mat.set_col(i, tgt->classify(w));
  }
  return HMap(src, tgt, std::move(mat), std::move(name));
}

/// Shorthand for automorphism- and inclusion-induced maps with identity module maps.
inline HMap induced_map(Engine& eng, const GroupHom& phi, const HomologyPtr& src, const HomologyPtr& tgt,
                        std::uint64_t seed = 0) {
  return induced_map(eng, phi, IntMatrix::identity(src->module().rank()), src, tgt, seed, phi.name());
}
inline HMap pullback_map(Engine& eng, const GroupHom& phi, const HomologyPtr& src, const HomologyPtr& tgt,
                         std::uint64_t seed = 0) {
  return pullback_map(eng, phi, IntMatrix::identity(src->module().rank()), src, tgt, seed, phi.name() + "^*");
}


// ---------------------------------------------------------------------------
// Products

/// Cochain-level cap: x ∩ c evaluates c on the front factor of the diagonal.
/// For Δ(e_j) ∋ coef·(g1·e_a ⊗ g2·e_b) with deg e_a = deg c:
/// (m ⊗ e_j) ∩ c = coef · g2^-1·(m ⊗ g1·c(e_a)) ⊗ e_b in (M ⊗ N) ⊗_G R.
inline HClass cap(Engine& eng, const HClass& x, const HClass& c, const GModule& MN, std::uint64_t seed = 0) {
  const auto &X = *x.home, &C = *c.home;
  if (X.variance() != Variance::Homology || C.variance() != Variance::Cohomology)
    throw std::invalid_argument("cap: need a homology class and a cohomology class");
  if (X.resolution() != C.resolution()) throw std::invalid_argument("cap: classes live on different resolutions");
  if (C.degree() > X.degree()) throw std::invalid_argument("cap: cohomology degree exceeds homology degree");
  const GModule &M = X.module(), &N = C.module();
  const std::size_t n = X.degree(), p = C.degree(), rm = M.rank(), rn = N.rank(), r = rm * rn;
  if (MN.group() != M.group() || MN.rank() != r) throw std::invalid_argument("cap: result module shape");
  for (Element g = 0; g < M.group()->order(); ++g)
    if (MN.act(g) != kron(M.act(g), N.act(g))) throw std::invalid_argument("cap: result module is not M ⊗ N");
  const auto& R = X.resolution();
  auto target = eng.group_on(R, MN, n - p, Variance::Homology);
  const DiagonalApprox& D = eng.diagonal(R, n, seed);
  const std::size_t ng = R->order(), n2 = ng * ng;
  const IntVector z = X.representative(x.coords), cv = C.representative(c.coords);
  IntVector w(target->chain_dim());
  for (std::size_t j = 0; j < R->rank(n); ++j) {
    IntVector m(rm);
    bool nz = false;
    for (std::size_t a = 0; a < rm; ++a) {
      m[a] = z[j * rm + a];
      nz = nz || !m[a].is_zero();
    }
    if (!nz) continue;
    for (const auto& [k, v] : D.map.images[n][j]) {
      const auto& slot = D.square->slot_of(n, k / n2);
      if (slot.p != p) continue;
      const Element g1 = static_cast<Element>((k % n2) / ng), g2 = static_cast<Element>(k % ng);
      IntVector ca(rn);
      for (std::size_t b = 0; b < rn; ++b) ca[b] = cv[slot.a * rn + b];
      const IntVector val = N.act(g1) * ca;
      IntVector mn(r);
      for (std::size_t a = 0; a < rm; ++a)
        for (std::size_t b = 0; b < rn; ++b) mn[a * rn + b] = m[a] * val[b];
      const IntVector y = MN.act(R->group()->inv(g2)) * mn;
      for (std::size_t i = 0; i < r; ++i) w[slot.b * r + i] += v * y[i];
    }
  }
  return HClass(target, target->classify(w));
}
inline HClass cap(Engine& eng, const HClass& x, const HClass& c, std::uint64_t seed = 0) {
  return cap(eng, x, c, tensor(x.home->module(), c.home->module()), seed);
}

/// Cochain-level cup: (c1 ∪ c2)(e_j) = sum coef · g1·c1(e_a) ⊗ g2·c2(e_b).
inline HClass cup(Engine& eng, const HClass& c1, const HClass& c2, const GModule& MN, std::uint64_t seed = 0) {
  const auto &A = *c1.home, &B = *c2.home;
  if (A.variance() != Variance::Cohomology || B.variance() != Variance::Cohomology)
    throw std::invalid_argument("cup: need two cohomology classes");
  if (A.resolution() != B.resolution()) throw std::invalid_argument("cup: classes live on different resolutions");
  const GModule &M = A.module(), &N = B.module();
  const std::size_t p = A.degree(), n = p + B.degree(), rm = M.rank(), rn = N.rank(), r = rm * rn;
  if (MN.group() != M.group() || MN.rank() != r) throw std::invalid_argument("cup: result module shape");
  for (Element g = 0; g < M.group()->order(); ++g)
    if (MN.act(g) != kron(M.act(g), N.act(g))) throw std::invalid_argument("cup: result module is not M ⊗ N");
  const auto& R = A.resolution();
  if (n + 1 > R->length()) throw ResourceLimit("cup: degree " + std::to_string(n) + " beyond the resolution");
  auto target = eng.group_on(R, MN, n, Variance::Cohomology);
  const DiagonalApprox& D = eng.diagonal(R, n, seed);
  const std::size_t ng = R->order(), n2 = ng * ng;
  const IntVector u = A.representative(c1.coords), v2 = B.representative(c2.coords);
  IntVector w(target->chain_dim());
  for (std::size_t j = 0; j < R->rank(n); ++j)
    for (const auto& [k, v] : D.map.images[n][j]) {
      const auto& slot = D.square->slot_of(n, k / n2);
      if (slot.p != p) continue;
      const Element g1 = static_cast<Element>((k % n2) / ng), g2 = static_cast<Element>(k % ng);
      IntVector ua(rm), vb(rn);
      for (std::size_t a = 0; a < rm; ++a) ua[a] = u[slot.a * rm + a];
      for (std::size_t b = 0; b < rn; ++b) vb[b] = v2[slot.b * rn + b];
      const IntVector x = M.act(g1) * ua, y = N.act(g2) * vb;
      for (std::size_t a = 0; a < rm; ++a)
        for (std::size_t b = 0; b < rn; ++b) w[j * r + a * rn + b] += v * x[a] * y[b];
    }
  return HClass(target, target->classify(w));
}
inline HClass cup(Engine& eng, const HClass& c1, const HClass& c2, std::uint64_t seed = 0) {
  return cup(eng, c1, c2, tensor(c1.home->module(), c2.home->module()), seed);
}

/// The map x ↦ x ∩ c from H_n(G;M) to H_{n-p}(G;M⊗N).
inline HMap cap_map(Engine& eng, const HomologyPtr& src, const HClass& c, const GModule& MN, std::uint64_t seed = 0,
                    std::string name = "cap") {
  const std::size_t k = src->num_generators();
  HomologyPtr target;
  IntMatrix mat;
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < k; ++i) {
    HClass y = cap(eng, HClass::generator(src, i), c, MN, seed);
    target = y.home;
    cols.push_back(y.coords);
  }
  if (!target) target = eng.group_on(src->resolution(), MN, src->degree() - c.home->degree(), Variance::Homology);
  mat = IntMatrix(target->num_generators(), k);
  for (std::size_t i = 0; i < k; ++i) mat.set_col(i, cols[i]);
  return HMap(src, target, std::move(mat), std::move(name));
}

// ---------------------------------------------------------------------------
// Transfer for a subgroup of finite index

/// H_q(G; M) -> H_q(H; M|H): m ⊗ e_j ↦ sum over right cosets H·r of r·m ⊗ r·e_j,
/// read in the G-resolution regarded as an H-resolution and then compared with
/// the resolution of H.
inline HMap transfer(Engine& eng, const GroupHom& inclusion, const HomologyPtr& src, const HomologyPtr& tgt,
                     std::uint64_t seed = 0) {
  if (src->variance() != Variance::Homology || tgt->variance() != Variance::Homology || src->degree() != tgt->degree())
    throw std::invalid_argument("transfer: need homology groups of equal degree");
  if (inclusion.target() != src->group() || inclusion.source() != tgt->group() || !inclusion.injective())
    throw std::invalid_argument("transfer: need an injective map from the target group into the source group");
  const GModule& M = src->module();
  if (!restrict_module(M, inclusion).same_action(tgt->module()))
    throw std::invalid_argument("transfer: target module is not the restriction of the source module");
  const std::size_t q = src->degree(), r = M.rank();
  auto sub = std::make_shared<RestrictedResolution>(src->resolution(), inclusion);
  const ChainMap f = lift_chain_map(identity_hom(tgt->group()), sub, tgt->resolution(), q, seed);
  const FiniteGroup& G = *src->group();
  const std::size_t nh = tgt->group()->order();
  IntMatrix mat(tgt->num_generators(), src->num_generators());
  for (std::size_t i = 0; i < src->num_generators(); ++i) {
    IntVector e(src->num_generators());
    e[i] = 1;
    const IntVector z = src->representative(e);
    IntVector w(sub->rank(q) * r);
    for (std::size_t j = 0; j < src->resolution()->rank(q); ++j) {
      IntVector m(r);
      for (std::size_t a = 0; a < r; ++a) m[a] = z[j * r + a];
      for (Element rep : sub->coset_reps()) {
        const std::size_t key = sub->sub_key_of_parent(j * G.order() + rep);
        const Element h = static_cast<Element>(key % nh);
        const IntVector y = tgt->module().act(tgt->group()->inv(h)) * (M.act(rep) * m);
        for (std::size_t a = 0; a < r; ++a) w[(key / nh) * r + a] += y[a];
      }
    }
    mat.set_col(i, tgt->classify(push_chain(f, q, IntMatrix::identity(r), tgt->module(), w)));
  }
  return HMap(src, tgt, std::move(mat), "transfer");
}

// ---------------------------------------------------------------------------
// Euler classes of rotation representations

/// The class of the cocycle e_2 ↦ 1 on the periodic resolution built from the
/// group's cyclic generator; it generates H²(G; Z) = Z/n.
inline HClass cyclic_degree2_generator(Engine& eng, const GroupPtr& G) {
  auto h = eng.cohomology(G, trivial_module(G), 2);
  if (h->resolution()->builder() != "periodic") throw GroupError("degree-2 generator needs a cyclic group");
  return HClass(h, h->classify(IntVector{1}));
}

/// w times the degree-2 generator, w the rotation weight of the image of the
/// cyclic generator used by the resolution.
inline HClass euler_class_cyclic(Engine& eng, const MatrixRep& rep) {
  const GroupPtr& G = rep.group;
  if (rep.dim() != 2) throw GroupError("euler class: representation " + rep.name + " is not 2-dimensional");
  auto R = eng.resolution(G, 3);
  auto per = std::dynamic_pointer_cast<const PeriodicResolution>(R);
  if (!per) throw GroupError("euler class: group " + G->name() + " is not cyclic");
  auto images = rep_element_images(*G, rep.generator_images, 2);
  if (!images) throw GroupError("euler class: representation " + rep.name + " is not a homomorphism");
  auto w = rotation_weight((*images)[per->generator()], G->order());
  if (!w) throw GroupError("euler class: representation " + rep.name + " is not of rotation type");
  return Integer(*w) * cyclic_degree2_generator(eng, G);
}

}  // namespace herbert
