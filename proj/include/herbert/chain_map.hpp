#pragma once

#include "herbert/resolution.hpp"

#include <random>

namespace herbert {

/// Chain map between resolutions over a homomorphism phi: f(h·x) = phi(h)·f(x).
/// images[q][j] is f(e_j) for the degree-q generator e_j of the source.
struct ChainMap {
  ResolutionPtr source, target;
  GroupHom over;
  std::vector<std::vector<Chain>> images;

  std::size_t length() const { return images.empty() ? 0 : images.size() - 1; }
  Chain apply(std::size_t q, const Chain& x) const {
    const std::size_t n = source->order();
    Chain out;
    for (const auto& [k, v] : x) chain_axpy(out, v, act(*target->group(), over(static_cast<Element>(k % n)), images[q][k / n]));
    return out;
  }
};

/// Comparison theorem: f_0(e_j) = aug(e_j)·unit, f_q(e_j) = s(f_{q-1}(d e_j)).
/// A nonzero seed adds the boundary of a random chain in each degree, giving a
/// different but chain-homotopic lift.
inline ChainMap lift_chain_map(const GroupHom& phi, ResolutionPtr src, ResolutionPtr tgt, std::size_t length,
                               std::uint64_t seed = 0) {
  if (phi.source() != src->group() || phi.target() != tgt->group())
    throw std::invalid_argument("lift_chain_map: homomorphism does not match the resolutions");
  if (length > src->length() || length > tgt->length())
    throw ResourceLimit("lift_chain_map: resolutions are shorter than the requested length");
  ChainMap f{src, tgt, phi, {}};
  f.images.resize(length + 1);
  std::mt19937_64 rng(seed);
  auto perturb = [&](std::size_t q, Chain& c) {
    if (!seed || q + 1 > tgt->length() || tgt->rank(q + 1) == 0) return;
    std::uniform_int_distribution<std::size_t> key(0, tgt->rank(q + 1) * tgt->order() - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    Chain r;
    for (int t = 0; t < 3; ++t) chain_add(r, key(rng), coef(rng));
    chain_axpy(c, 1, tgt->boundary_of(q + 1, r));
  };
  const Chain unit = tgt->unit();
  for (std::size_t j = 0; j < src->rank(0); ++j) {
    Chain c;
    chain_axpy(c, src->augmentation(j), unit);
    perturb(0, c);
    f.images[0].push_back(std::move(c));
  }
  for (std::size_t q = 1; q <= length; ++q)
    for (std::size_t j = 0; j < src->rank(q); ++j) {
      Chain c = tgt->homotopy(q - 1, f.apply(q - 1, src->boundary(q, j)));
      perturb(q, c);
      f.images[q].push_back(std::move(c));
    }
  return f;
}

/// d f = f d in every degree, and augmentation compatibility in degree 0.
inline bool check_chain_map(const ChainMap& f) {
  for (std::size_t j = 0; j < f.source->rank(0); ++j)
    if (f.target->augment(f.images[0][j]) != f.source->augmentation(j)) return false;
  for (std::size_t q = 1; q <= f.length(); ++q)
    for (std::size_t j = 0; j < f.source->rank(q); ++j)
      if (f.target->boundary_of(q, f.images[q][j]) != f.apply(q - 1, f.source->boundary(q, j))) return false;
  return true;
}

/// A chain map R -> R ⊗ R over the diagonal G -> G x G.
struct DiagonalApprox {
  std::shared_ptr<const TensorResolution> square;
  ChainMap map;
};

inline GroupHom diagonal_hom(const GroupPtr& G, const GroupPtr& GxG) {
  std::vector<Element> im(G->order());
  for (Element g = 0; g < im.size(); ++g) im[g] = static_cast<Element>(g * G->order() + g);
  return GroupHom(G, GxG, std::move(im), "diagonal");
}

inline DiagonalApprox diagonal_approx(const ResolutionPtr& R, std::size_t length, std::uint64_t seed = 0) {
  auto GxG = direct_product(R->group(), R->group(), R->group()->name() + "^2");
  auto square = std::make_shared<TensorResolution>(R, R, GxG, length);
  ChainMap m = lift_chain_map(diagonal_hom(R->group(), GxG), R, square, length, seed);
  return DiagonalApprox{square, std::move(m)};
}

}  // namespace herbert
