#pragma once

// Free resolutions of Z over Z[G].  A chain in degree q is a Z-combination of
// the elements g·e_j (key j*|G| + g); the boundary of e_j is boundary(q, j) and
// d(g·x) = g·d(x).  Every resolution carries a Z-linear contracting homotopy s
// (d s + s d = 1, and d s_0 + unit·augmentation = 1 in degree 0), which is what
// chain-map lifting uses.

#include "herbert/group_ring.hpp"
#include "herbert/hom.hpp"
#include "herbert/normal_form.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace herbert {

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxResolutionLength = 9;
/// Generic builder: largest Z-rank rank(q-1)*|G| it will take a kernel of.
inline constexpr std::size_t kMaxGenericColumns = 160;

inline Chain act(const FiniteGroup& G, Element g, const Chain& x) {
  const std::size_t n = G.order();
  Chain out;
  for (const auto& [k, v] : x) out.emplace(k - k % n + G.mul(g, static_cast<Element>(k % n)), v);
  return out;
}

class Resolution {
 public:
  virtual ~Resolution() = default;
  virtual const GroupPtr& group() const = 0;
  virtual std::size_t length() const = 0;
  virtual std::size_t rank(std::size_t q) const = 0;
  /// d(e_j) for a generator of degree q >= 1.
  virtual const Chain& boundary(std::size_t q, std::size_t j) const = 0;
  /// Augmentation of a degree-0 generator.
  virtual Integer augmentation(std::size_t j) const = 0;
  /// A degree-0 chain of augmentation 1.
  virtual Chain unit() const = 0;
  /// s applied to the basis element with the given key in degree q (q < length).
  virtual Chain homotopy_basis(std::size_t q, std::size_t key) const = 0;
  virtual std::string builder() const = 0;

  std::size_t order() const { return group()->order(); }

  Chain boundary_of(std::size_t q, const Chain& x) const {
    Chain out;
    if (q == 0) return out;
    const std::size_t n = order();
    for (const auto& [k, v] : x) chain_axpy(out, v, act(*group(), static_cast<Element>(k % n), boundary(q, k / n)));
    return out;
  }
  Integer augment(const Chain& x) const {
    Integer s = 0;
    for (const auto& [k, v] : x) s += v * augmentation(k / order());
    return s;
  }
  Chain homotopy(std::size_t q, const Chain& x) const {
    if (q >= length()) throw ResourceLimit("homotopy requested beyond the resolution length");
    Chain out;
    for (const auto& [k, v] : x) chain_axpy(out, v, homotopy_cached(q, k));
    return out;
  }

  /// Z-flattened d_q: rows rank(q-1)*|G|, columns rank(q)*|G|; for q = 0 the
  /// augmentation as a 1-row matrix.
  IntMatrix flat_boundary(std::size_t q) const {
    const std::size_t n = order();
    if (q == 0) {
      IntMatrix m(1, rank(0) * n);
      for (std::size_t j = 0; j < rank(0); ++j)
        for (std::size_t g = 0; g < n; ++g) m(0, j * n + g) = augmentation(j);
      return m;
    }
    IntMatrix m(rank(q - 1) * n, rank(q) * n);
    for (std::size_t j = 0; j < rank(q); ++j)
      for (Element g = 0; g < n; ++g)
        for (const auto& [k, v] : act(*group(), g, boundary(q, j))) m(k, j * n + g) = v;
    return m;
  }

 private:
  const Chain& homotopy_cached(std::size_t q, std::size_t key) const {
    std::lock_guard<std::recursive_mutex> lock(memo_mutex_);
    auto it = memo_[q].find(key);
    if (it != memo_[q].end()) return it->second;
    Chain c = homotopy_basis(q, key);
    return memo_[q].emplace(key, std::move(c)).first->second;
  }
  mutable std::recursive_mutex memo_mutex_;
  mutable std::array<std::unordered_map<std::size_t, Chain>, kMaxResolutionLength + 1> memo_;
};

using ResolutionPtr = std::shared_ptr<const Resolution>;

// ---------------------------------------------------------------------------

/// Rank one in every degree; d alternates (g - 1) and the norm element.
class PeriodicResolution final : public Resolution {
 public:
  PeriodicResolution(GroupPtr G, std::size_t length) : group_(std::move(G)), length_(length) {
    auto g = group_->cyclic_generator();
    if (!g) throw GroupError("periodic resolution needs a cyclic group; " + group_->name() + " is not cyclic");
    if (length_ > kMaxResolutionLength) throw ResourceLimit("resolution length above the budget");
    gen_ = *g;
    const std::size_t n = group_->order();
    powers_.push_back(group_->identity());
    for (std::size_t k = 1; k < n; ++k) powers_.push_back(group_->mul(powers_.back(), gen_));
    exponent_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) exponent_[powers_[k]] = k;
    chain_add(odd_, gen_, 1);
    chain_add(odd_, group_->identity(), -1);
    for (Element x : powers_) chain_add(even_, x, 1);
  }
  const GroupPtr& group() const override { return group_; }
  std::size_t length() const override { return length_; }
  std::size_t rank(std::size_t q) const override { return q <= length_ ? 1 : 0; }
  const Chain& boundary(std::size_t q, std::size_t) const override { return q % 2 ? odd_ : even_; }
  Integer augmentation(std::size_t) const override { return 1; }
  Chain unit() const override { return Chain{{group_->identity(), 1}}; }
  Chain homotopy_basis(std::size_t q, std::size_t key) const override {
    const std::size_t k = exponent_[key % group_->order()];
    Chain out;
    if (q % 2 == 1) {
      if (k + 1 == group_->order()) chain_add(out, group_->identity(), 1);
    } else {
      for (std::size_t i = 0; i < k; ++i) chain_add(out, powers_[i], 1);
    }
    return out;
  }
  std::string builder() const override { return "periodic"; }
  Element generator() const { return gen_; }

 private:
  GroupPtr group_;
  std::size_t length_;
  Element gen_ = 0;
  std::vector<Element> powers_;
  std::vector<std::size_t> exponent_;
  Chain odd_, even_;
};

// ---------------------------------------------------------------------------

/// Total complex of R1 ⊗ R2 over G1 x G2 (the group must be the direct product
/// built from the two groups, element (g1,g2) at g1*|G2| + g2).  Sign rule
/// d(x⊗y) = dx⊗y + (-1)^{deg x} x⊗dy.  Homotopy s1⊗1 + unit·aug⊗s2.
class TensorResolution final : public Resolution {
 public:
  struct Slot {
    std::size_t p, a, b;
  };

  TensorResolution(ResolutionPtr r1, ResolutionPtr r2, GroupPtr product, std::size_t length)
      : r1_(std::move(r1)), r2_(std::move(r2)), group_(std::move(product)), length_(length) {
    if (length_ > r1_->length() || length_ > r2_->length())
      throw std::invalid_argument("tensor resolution: factors are too short for the requested length");
    if (group_->order() != r1_->order() * r2_->order())
      throw std::invalid_argument("tensor resolution: group is not the product of the factor groups");
    slots_.resize(length_ + 1);
    index_.resize(length_ + 1);
    for (std::size_t n = 0; n <= length_; ++n)
      for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t a = 0; a < r1_->rank(p); ++a)
          for (std::size_t b = 0; b < r2_->rank(n - p); ++b) {
            index_[n][key3(p, a, b)] = slots_[n].size();
            slots_[n].push_back({p, a, b});
          }
    bd_.resize(length_ + 1);
    for (std::size_t n = 1; n <= length_; ++n)
      for (const auto& s : slots_[n]) {
        Chain c;
        const std::size_t n2 = r2_->order();
        const Element e1 = r1_->group()->identity(), e2 = r2_->group()->identity();
        if (s.p > 0)
          for (const auto& [k, v] : r1_->boundary(s.p, s.a))
            chain_add(c, slot(n - 1, s.p - 1, k / r1_->order(), s.b) * order() + (k % r1_->order()) * n2 + e2, v);
        if (n - s.p > 0) {
          const Integer sign = s.p % 2 ? -1 : 1;
          for (const auto& [k, v] : r2_->boundary(n - s.p, s.b))
            chain_add(c, slot(n - 1, s.p, s.a, k / n2) * order() + e1 * n2 + (k % n2), sign * v);
        }
        bd_[n].push_back(std::move(c));
      }
  }

  const GroupPtr& group() const override { return group_; }
  std::size_t length() const override { return length_; }
  std::size_t rank(std::size_t q) const override { return q <= length_ ? slots_[q].size() : 0; }
  const Chain& boundary(std::size_t q, std::size_t j) const override { return bd_[q][j]; }
  Integer augmentation(std::size_t j) const override {
    const auto& s = slots_[0][j];
    return r1_->augmentation(s.a) * r2_->augmentation(s.b);
  }
  Chain unit() const override { return product(0, r1_->unit(), 0, r2_->unit()); }
  Chain homotopy_basis(std::size_t q, std::size_t key) const override {
    const std::size_t n2 = r2_->order();
    const auto& s = slots_[q][key / order()];
    const std::size_t g = key % order();
    const Chain x1{{s.a * r1_->order() + g / n2, 1}};
    const Chain x2{{s.b * n2 + g % n2, 1}};
    Chain out = product(s.p + 1, r1_->homotopy(s.p, x1), q - s.p, x2);
    if (s.p == 0) chain_axpy(out, r1_->augment(x1), product(0, r1_->unit(), q + 1, r2_->homotopy(q, x2)));
    return out;
  }
  std::string builder() const override { return "tensor(" + r1_->builder() + "," + r2_->builder() + ")"; }

  const Slot& slot_of(std::size_t q, std::size_t j) const { return slots_[q][j]; }
  std::size_t slot(std::size_t n, std::size_t p, std::size_t a, std::size_t b) const {
    return index_[n].at(key3(p, a, b));
  }
  const Resolution& first() const { return *r1_; }
  const Resolution& second() const { return *r2_; }

  /// x ⊗ y for chains of degrees p and q of the two factors.
  Chain product(std::size_t p, const Chain& x, std::size_t q, const Chain& y) const {
    Chain out;
    const std::size_t n1 = r1_->order(), n2 = r2_->order();
    for (const auto& [k1, v1] : x)
      for (const auto& [k2, v2] : y)
        chain_add(out, slot(p + q, p, k1 / n1, k2 / n2) * order() + (k1 % n1) * n2 + (k2 % n2), v1 * v2);
    return out;
  }

 private:
  static std::size_t key3(std::size_t p, std::size_t a, std::size_t b) { return (p * 4096 + a) * 4096 + b; }

  ResolutionPtr r1_, r2_;
  GroupPtr group_;
  std::size_t length_;
  std::vector<std::vector<Slot>> slots_;
  std::vector<std::unordered_map<std::size_t, std::size_t>> index_;
  std::vector<std::vector<Chain>> bd_;
};

// ---------------------------------------------------------------------------

/// Built degree by degree from Z-lattice kernels; group-ring generators are
/// chosen greedily among kernel vectors (shortest first) until their
/// translates span the kernel.  The homotopy solves d y = x - s(d x).
class GenericResolution final : public Resolution {
 public:
  GenericResolution(GroupPtr G, std::size_t length) : group_(std::move(G)), length_(length) {
    if (length_ > kMaxResolutionLength) throw ResourceLimit("resolution length above the budget");
    if (group_->order() > FiniteGroup::kMaxOrder) throw ResourceLimit("group order above the budget");
    bd_.resize(length_ + 1);
    ranks_.push_back(1);
    for (std::size_t q = 1; q <= length_; ++q) extend(q);
  }
  /// From stored boundaries (cache); validated by the caller.
  GenericResolution(GroupPtr G, std::vector<std::vector<Chain>> boundaries)
      : group_(std::move(G)), length_(boundaries.size() - 1), bd_(std::move(boundaries)) {
    ranks_.push_back(1);
    for (std::size_t q = 1; q <= length_; ++q) ranks_.push_back(bd_[q].size());
  }

  const GroupPtr& group() const override { return group_; }
  std::size_t length() const override { return length_; }
  std::size_t rank(std::size_t q) const override { return q <= length_ ? ranks_[q] : 0; }
  const Chain& boundary(std::size_t q, std::size_t j) const override { return bd_[q][j]; }
  Integer augmentation(std::size_t) const override { return 1; }
  Chain unit() const override { return Chain{{group_->identity(), 1}}; }
  Chain homotopy_basis(std::size_t q, std::size_t key) const override {
    Chain x{{key, 1}};
    Chain target = x;
    if (q == 0) chain_add(target, group_->identity(), -augment(x));
    else chain_axpy(target, -1, homotopy(q - 1, boundary_of(q, x)));
    const LinearSolver& solver = solver_for(q + 1);
    IntVector b(rank(q) * order());
    for (const auto& [k, v] : target) b[k] = v;
    auto y = solver.solve(b);
    if (!y) throw std::logic_error("generic resolution: contracting homotopy has no solution (not exact)");
    Chain out;
    for (std::size_t i = 0; i < y->size(); ++i) chain_add(out, i, (*y)[i]);
    return out;
  }
  std::string builder() const override { return "generic"; }
  const std::vector<std::vector<Chain>>& boundaries() const { return bd_; }

 private:
  void extend(std::size_t q) {
    const std::size_t n = order();
    if (rank(q - 1) * n > kMaxGenericColumns)
      throw ResourceLimit("generic resolution of " + group_->name() + " beyond degree " + std::to_string(q - 1) +
                          " exceeds the size budget");
    IntMatrix K = kernel_basis(flat_boundary(q - 1));
    std::vector<IntVector> cand;
    for (std::size_t c = 0; c < K.cols(); ++c) cand.push_back(K.col(c));
    auto weight = [](const IntVector& v) {
      Integer s = 0;
      for (const auto& x : v) s += abs(x);
      return s;
    };
    std::stable_sort(cand.begin(), cand.end(), [&](const IntVector& a, const IntVector& b) { return weight(a) < weight(b); });
    IntMatrix span(K.rows(), 0);
    LinearSolver solver(span);
    std::vector<Chain> gens;
    for (const auto& v : cand) {
      if (span.cols() && solver.solve(v)) continue;
      Chain c;
      for (std::size_t i = 0; i < v.size(); ++i) chain_add(c, i, v[i]);
      IntMatrix translates(K.rows(), n);
      for (Element g = 0; g < n; ++g)
        for (const auto& [k, val] : act(*group_, g, c)) translates(k, g) = val;
      span = hstack(span, translates);
      solver = LinearSolver(span);
      gens.push_back(std::move(c));
    }
    ranks_.push_back(gens.size());
    bd_[q] = std::move(gens);
  }
  const LinearSolver& solver_for(std::size_t q) const {
    std::lock_guard<std::mutex> lock(solver_mutex_);
    if (solvers_.size() <= q) solvers_.resize(q + 1);
    if (!solvers_[q]) solvers_[q] = std::make_unique<LinearSolver>(flat_boundary(q));
    return *solvers_[q];
  }

  GroupPtr group_;
  std::size_t length_;
  std::vector<std::vector<Chain>> bd_;
  std::vector<std::size_t> ranks_;
  mutable std::mutex solver_mutex_;
  mutable std::vector<std::unique_ptr<LinearSolver>> solvers_;
};

// ---------------------------------------------------------------------------

/// A G-resolution viewed over a subgroup H (given by an injective map): the
/// H-basis of degree q is r·e_j for right coset representatives r (G = ⊔ H r),
/// generator index j * [G:H] + (index of r).
class RestrictedResolution final : public Resolution {
 public:
  RestrictedResolution(ResolutionPtr parent, GroupHom embedding)
      : parent_(std::move(parent)), emb_(std::move(embedding)) {
    if (!emb_.injective() || emb_.target() != parent_->group())
      throw GroupError("restricted resolution: need an injective map into the resolution's group");
    const FiniteGroup& G = *parent_->group();
    std::vector<bool> covered(G.order(), false);
    coset_of_.assign(G.order(), 0);
    h_of_.assign(G.order(), 0);
    for (Element r = 0; r < G.order(); ++r) {
      if (covered[r]) continue;
      const std::size_t idx = reps_.size();
      reps_.push_back(r);
      for (Element h = 0; h < emb_.source()->order(); ++h) {
        Element g = G.mul(emb_(h), r);
        covered[g] = true;
        coset_of_[g] = idx;
        h_of_[g] = h;
      }
    }
    const std::size_t m = reps_.size();
    bd_.resize(parent_->length() + 1);
    for (std::size_t q = 1; q <= parent_->length(); ++q)
      for (std::size_t j = 0; j < parent_->rank(q); ++j)
        for (std::size_t ri = 0; ri < m; ++ri)
          bd_[q].push_back(to_sub(act(G, reps_[ri], parent_->boundary(q, j))));
  }

  const GroupPtr& group() const override { return emb_.source(); }
  std::size_t length() const override { return parent_->length(); }
  std::size_t rank(std::size_t q) const override { return parent_->rank(q) * reps_.size(); }
  const Chain& boundary(std::size_t q, std::size_t j) const override { return bd_[q][j]; }
  Integer augmentation(std::size_t j) const override { return parent_->augmentation(j / reps_.size()); }
  Chain unit() const override { return to_sub(parent_->unit()); }
  Chain homotopy_basis(std::size_t q, std::size_t key) const override {
    return to_sub(parent_->homotopy(q, Chain{{to_parent_key(key), 1}}));
  }
  std::string builder() const override { return "restricted(" + parent_->builder() + ")"; }

  const std::vector<Element>& coset_reps() const { return reps_; }
  std::size_t index() const { return reps_.size(); }
  /// Key of the basis element r_i·e_j in the H-basis.
  std::size_t sub_key_of_parent(std::size_t parent_key) const {
    const std::size_t n = parent_->order();
    const Element g = static_cast<Element>(parent_key % n);
    return ((parent_key / n) * reps_.size() + coset_of_[g]) * emb_.source()->order() + h_of_[g];
  }
  Chain to_sub(const Chain& x) const {
    Chain out;
    for (const auto& [k, v] : x) out.emplace(sub_key_of_parent(k), v);
    return out;
  }
  std::size_t to_parent_key(std::size_t key) const {
    const std::size_t nh = emb_.source()->order(), m = reps_.size();
    const std::size_t gen = key / nh;
    const Element g = parent_->group()->mul(emb_(static_cast<Element>(key % nh)), reps_[gen % m]);
    return (gen / m) * parent_->order() + g;
  }

 private:
  ResolutionPtr parent_;
  GroupHom emb_;
  std::vector<Element> reps_;
  std::vector<std::size_t> coset_of_;
  std::vector<Element> h_of_;
  std::vector<std::vector<Chain>> bd_;
};

// ---------------------------------------------------------------------------
// Validation

struct ResolutionCheck {
  bool d_squared_zero = true;
  bool augmentation_ok = true;
  bool exact = true;
  std::string detail;
  bool ok() const { return d_squared_zero && augmentation_ok && exact; }
};

/// d∘d = 0 in the group ring, ε∘d = 0, and exactness of the Z-flattened
/// augmented complex in degrees 0 .. length-1.
inline ResolutionCheck check_resolution(const Resolution& R) {
  ResolutionCheck c;
  for (std::size_t q = 1; q <= R.length(); ++q)
    for (std::size_t j = 0; j < R.rank(q); ++j) {
      if (q == 1 && R.augment(R.boundary(1, j)) != 0) c.augmentation_ok = false;
      if (q >= 2 && !R.boundary_of(q - 1, R.boundary(q, j)).empty()) {
        c.d_squared_zero = false;
        c.detail = "d∘d != 0 at degree " + std::to_string(q);
      }
    }
  if (R.augment(R.unit()) != 1) c.augmentation_ok = false;
  for (std::size_t q = 0; q < R.length() && c.d_squared_zero; ++q) {
    IntMatrix in = R.flat_boundary(q + 1), out = R.flat_boundary(q);
    const std::size_t ker_rank = out.cols() - rank_of(out);
    if (rank_of(in) != ker_rank) {
      c.exact = false;
      c.detail = "rank defect at degree " + std::to_string(q);
      continue;
    }
    // torsion-free quotient: image is saturated in the kernel
    IntMatrix K = kernel_basis(out);
    for (std::size_t j = 0; j < K.cols(); ++j)
      if (!solve_integer(in, K.col(j))) {
        c.exact = false;
        c.detail = "torsion in homology at degree " + std::to_string(q);
        break;
      }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Builders

/// periodic for cyclic groups, tensor for recorded direct products, generic otherwise.
inline ResolutionPtr make_resolution(const GroupPtr& G, std::size_t length) {
  if (length > kMaxResolutionLength) throw ResourceLimit("resolution length " + std::to_string(length) + " above the budget");
  if (G->cyclic_generator()) return std::make_shared<PeriodicResolution>(G, length);
  if (const auto& f = G->factors())
    return std::make_shared<TensorResolution>(make_resolution(f->first, length), make_resolution(f->second, length), G,
                                              length);
  return std::make_shared<GenericResolution>(G, length);
}

}  // namespace herbert
