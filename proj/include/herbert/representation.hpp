#pragma once

#include "herbert/extension.hpp"
#include "herbert/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace herbert {

/// Integer matrix representation of a finite group, or of a Z-extension
/// (fiber generators plus one matrix for the Z-generator).
struct MatrixRep {
  std::string name;
  GroupPtr group;
  std::optional<ZExtension> extension;
  std::vector<IntMatrix> generator_images;  // in the order of group->generators()
  std::optional<IntMatrix> z_image;

  std::size_t dim() const { return generator_images.empty() ? (z_image ? z_image->rows() : 0) : generator_images[0].rows(); }
};

struct RepCheck {
  std::string claim;
  bool ok = false;
  std::string detail;
};

struct RepReport {
  std::vector<RepCheck> checks;
  std::vector<std::pair<std::string, int>> det_character;  // generator name, det of its image
  std::optional<long long> rotation_weight;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

inline bool is_signed_permutation(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (m(i, j) != 1 && m(i, j) != -1) return false;
      ++nonzero;
    }
    if (nonzero != 1) return false;
  }
  return m * m.transpose() == IntMatrix::identity(m.rows());
}

/// Images of every element, extended along shortest words; nullopt when the
/// generator images do not respect the group law.
inline std::optional<std::vector<IntMatrix>> rep_element_images(const FiniteGroup& G,
                                                                const std::vector<IntMatrix>& gens, std::size_t dim,
                                                                std::string* failure = nullptr) {
  if (gens.size() != G.generators().size()) {
    if (failure) *failure = "wrong number of generator images";
    return std::nullopt;
  }
  std::vector<IntMatrix> img(G.order());
  std::vector<bool> set(G.order(), false);
  img[G.identity()] = IntMatrix::identity(dim);
  set[G.identity()] = true;
  std::vector<Element> queue{G.identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element x = G.mul(queue[k], G.generators()[s].element);
      if (set[x]) continue;
      set[x] = true;
      img[x] = img[queue[k]] * gens[s];
      queue.push_back(x);
    }
  for (Element g = 0; g < G.order(); ++g)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element x = G.mul(g, G.generators()[s].element);
      if (img[x] != img[g] * gens[s]) {
        if (failure) *failure = "image of " + G.label(g) + "*" + G.generators()[s].name + " is inconsistent";
        return std::nullopt;
      }
    }
  return img;
}

/// Powers of the quarter turn [[0,-1],[1,0]].
inline IntMatrix quarter_turn_power(long long k) {
  IntMatrix j{{0, -1}, {1, 0}}, r = IntMatrix::identity(2);
  k = ((k % 4) + 4) % 4;
  for (long long i = 0; i < k; ++i) r = r * j;
  return r;
}

/// Weight w of a 2-dimensional rotation representation of a cyclic group of
/// order n: the generator acts by rotation through 2*pi*w/n.  Only rotations
/// by multiples of a quarter turn have integer matrices in the standard basis.
inline std::optional<long long> rotation_weight(const IntMatrix& image, std::size_t n) {
  if (image.rows() != 2 || image.cols() != 2) return std::nullopt;
  for (long long k = 0; k < 4; ++k) {
    if (quarter_turn_power(k) != image) continue;
    if ((k * static_cast<long long>(n)) % 4 != 0) return std::nullopt;
    return (k * static_cast<long long>(n) / 4) % static_cast<long long>(n);
  }
  return std::nullopt;
}

inline RepReport verify_matrix_rep(const MatrixRep& rep) {
  RepReport r;
  const auto& G = *rep.group;
  const std::size_t d = rep.dim();
  auto add = [&](std::string claim, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(claim), ok, std::move(detail)});
  };
  bool shapes = true;
  for (const auto& m : rep.generator_images) shapes = shapes && m.rows() == d && m.cols() == d;
  if (rep.z_image) shapes = shapes && rep.z_image->rows() == d && rep.z_image->cols() == d;
  add("square images of a common dimension", shapes);
  if (!shapes) return r;

  std::string why;
  auto all = rep_element_images(G, rep.generator_images, d, &why);
  add("relations of " + G.name(), all.has_value(), why);
  for (std::size_t s = 0; s < rep.generator_images.size(); ++s) {
    const auto& g = G.generators()[s];
    IntMatrix p = IntMatrix::identity(d);
    for (std::size_t k = 0; k < G.element_order(g.element); ++k) p = p * rep.generator_images[s];
    add(g.name + "^" + std::to_string(G.element_order(g.element)) + " = 1", p == IntMatrix::identity(d));
  }
  if (rep.extension && all) {
    const IntMatrix& T = *rep.z_image;
    bool ok = is_unimodular(T);
    std::string bad;
    for (Element g = 0; g < G.order() && ok; ++g)
      if ((*all)[g] * T != T * (*all)[rep.extension->theta()(g)]) {
        ok = false;
        bad = "fails at " + G.label(g);
      }
    add("a^-1 g a = theta(g) for every fiber element g", ok, bad);
  }
  bool orth = true;
  for (const auto& m : rep.generator_images) orth = orth && is_signed_permutation(m);
  if (rep.z_image) orth = orth && is_signed_permutation(*rep.z_image);
  add("images are signed permutation matrices", orth);

  for (std::size_t s = 0; s < rep.generator_images.size(); ++s)
    r.det_character.emplace_back(G.generators()[s].name, to_ll(determinant(rep.generator_images[s])));
  if (rep.z_image) r.det_character.emplace_back("a", to_ll(determinant(*rep.z_image)));
  if (d == 2 && G.generators().size() == 1) {
    if (auto w = rotation_weight(rep.generator_images[0], G.order())) r.rotation_weight = *w;
  }
  return r;
}

/// Pull a representation back along a group homomorphism into its group.
inline MatrixRep restrict_rep(const MatrixRep& rep, const GroupHom& phi, std::string name = {}) {
  if (phi.target() != rep.group) throw GroupError("restrict_rep: homomorphism does not land in the represented group");
  auto all = rep_element_images(*rep.group, rep.generator_images, rep.dim());
  if (!all) throw GroupError("restrict_rep: representation " + rep.name + " is not a homomorphism");
  MatrixRep out;
  out.name = name.empty() ? rep.name + "|" + phi.source()->name() : std::move(name);
  out.group = phi.source();
  for (const auto& g : phi.source()->generators()) out.generator_images.push_back((*all)[phi(g.element)]);
  return out;
}

/// Same along a morphism of Z-extensions; the Z-generator keeps its matrix.
inline MatrixRep restrict_rep(const MatrixRep& rep, const ExtensionHom& phi, std::string name = {}) {
  MatrixRep out = restrict_rep(rep, phi.fiber_map(), std::move(name));
  out.extension = phi.source();
  out.z_image = rep.z_image;
  return out;
}

}  // namespace herbert
