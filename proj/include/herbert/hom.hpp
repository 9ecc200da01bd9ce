#pragma once

#include "herbert/group.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace herbert {

/// A homomorphism between finite groups, stored as the image of every element.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Element> images, std::string name = {})
      : src_(std::move(source)), tgt_(std::move(target)), images_(std::move(images)), name_(std::move(name)) {
    validate();
  }

  const GroupPtr& source() const { return src_; }
  const GroupPtr& target() const { return tgt_; }
  const std::vector<Element>& images() const { return images_; }
  const std::string& name() const { return name_; }
  Element operator()(Element g) const { return images_[g]; }

  bool injective() const {
    std::vector<bool> hit(tgt_->order(), false);
    for (Element x : images_) {
      if (hit[x]) return false;
      hit[x] = true;
    }
    return true;
  }
  bool surjective() const {
    std::vector<bool> hit(tgt_->order(), false);
    for (Element x : images_) hit[x] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }
  bool is_identity() const {
    if (src_ != tgt_) return false;
    for (Element g = 0; g < images_.size(); ++g)
      if (images_[g] != g) return false;
    return true;
  }
  std::vector<Element> image() const {
    std::vector<bool> hit(tgt_->order(), false);
    for (Element x : images_) hit[x] = true;
    std::vector<Element> out;
    for (Element h = 0; h < hit.size(); ++h)
      if (hit[h]) out.push_back(h);
    return out;
  }
  std::vector<Element> kernel() const {
    std::vector<Element> out;
    for (Element g = 0; g < images_.size(); ++g)
      if (images_[g] == tgt_->identity()) out.push_back(g);
    return out;
  }
  /// Preimage of an element of the image under an injective map.
  Element preimage(Element h) const {
    for (Element g = 0; g < images_.size(); ++g)
      if (images_[g] == h) return g;
    throw GroupError("element " + tgt_->label(h) + " is not in the image of " + name_);
  }

 private:
  void validate() const {
    if (!src_ || !tgt_) throw GroupError("homomorphism with a null group");
    if (images_.size() != src_->order()) throw GroupError("homomorphism image table has wrong size");
    for (Element x : images_)
      if (x >= tgt_->order()) throw GroupError("homomorphism image out of range");
    for (Element a = 0; a < src_->order(); ++a)
      for (Element b = 0; b < src_->order(); ++b)
        if (images_[src_->mul(a, b)] != tgt_->mul(images_[a], images_[b]))
          throw GroupError("map " + name_ + " is not a homomorphism: phi(" + src_->label(a) + "*" + src_->label(b) +
                           ") != phi(" + src_->label(a) + ")*phi(" + src_->label(b) + ")");
  }

  GroupPtr src_, tgt_;
  std::vector<Element> images_;
  std::string name_;
};

/// phi after psi.
inline GroupHom compose(const GroupHom& phi, const GroupHom& psi) {
  if (psi.target()->order() != phi.source()->order()) throw GroupError("compose: incompatible homomorphisms");
  std::vector<Element> im(psi.source()->order());
  for (Element g = 0; g < im.size(); ++g) im[g] = phi(psi(g));
  return GroupHom(psi.source(), phi.target(), std::move(im), phi.name() + "∘" + psi.name());
}

inline GroupHom identity_hom(const GroupPtr& G) {
  std::vector<Element> im(G->order());
  for (Element g = 0; g < im.size(); ++g) im[g] = g;
  return GroupHom(G, G, std::move(im), "id");
}

/// Extends an assignment on the generators of G (in order) to a homomorphism.
/// Throws naming the first relation that fails.
inline GroupHom make_hom(const GroupPtr& G, const GroupPtr& H, const std::vector<Element>& generator_images,
                         std::string name = {}) {
  const auto& gens = G->generators();
  if (generator_images.size() != gens.size())
    throw GroupError("make_hom: " + std::to_string(gens.size()) + " generator images needed, got " +
                     std::to_string(generator_images.size()));
  const auto words = G->words();
  auto word_str = [&](Element g) {
    std::string s;
    for (std::size_t k : words[g]) s += (s.empty() ? "" : "*") + gens[k].name;
    return s.empty() ? std::string("e") : s;
  };
  std::vector<Element> img(G->order(), 0);
  std::vector<bool> set(G->order(), false);
  img[G->identity()] = H->identity();
  set[G->identity()] = true;
  std::vector<Element> queue{G->identity()};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element x = G->mul(queue[k], gens[s].element);
      Element y = H->mul(img[queue[k]], generator_images[s]);
      if (!set[x]) {
        set[x] = true;
        img[x] = y;
        queue.push_back(x);
      }
    }
  // every product of an element with a generator must be respected
  for (Element g = 0; g < G->order(); ++g)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Element x = G->mul(g, gens[s].element);
      if (img[x] != H->mul(img[g], generator_images[s]))
        throw GroupError("make_hom: relation violated: " + word_str(g) + "*" + gens[s].name + " = " + word_str(x) +
                         " in " + G->name() + " but the images differ (" + H->label(H->mul(img[g], generator_images[s])) +
                         " vs " + H->label(img[x]) + ")");
    }
  return GroupHom(G, H, std::move(img), std::move(name));
}

/// Same, with generator images given by element label.
inline GroupHom make_hom(const GroupPtr& G, const GroupPtr& H, const std::map<std::string, std::string>& by_name,
                         std::string name = {}) {
  std::vector<Element> im;
  for (const auto& g : G->generators()) {
    auto it = by_name.find(g.name);
    if (it == by_name.end()) throw GroupError("make_hom: no image given for generator " + g.name);
    im.push_back(H->element(it->second));
  }
  return make_hom(G, H, im, std::move(name));
}

/// A bijective endomorphism.
class GroupAut {
 public:
  GroupAut() = default;
  explicit GroupAut(GroupHom h) : hom_(std::move(h)) {
    if (hom_.source() != hom_.target()) throw GroupError("automorphism must have equal source and target");
    if (!hom_.injective()) throw GroupError("map " + hom_.name() + " is not bijective");
  }
  const GroupHom& hom() const { return hom_; }
  const GroupPtr& group() const { return hom_.source(); }
  Element operator()(Element g) const { return hom_(g); }
  GroupAut inverse() const {
    std::vector<Element> im(group()->order());
    for (Element g = 0; g < im.size(); ++g) im[hom_(g)] = g;
    return GroupAut(GroupHom(group(), group(), std::move(im), hom_.name() + "^-1"));
  }
  bool commutes_with(const GroupAut& o) const {
    for (Element g = 0; g < group()->order(); ++g)
      if ((*this)(o(g)) != o((*this)(g))) return false;
    return true;
  }
  std::size_t order() const {
    std::size_t k = 1;
    std::vector<Element> cur = hom_.images();
    auto is_id = [&] {
      for (Element g = 0; g < cur.size(); ++g)
        if (cur[g] != g) return false;
      return true;
    };
    while (!is_id()) {
      for (auto& x : cur) x = hom_(x);
      ++k;
    }
    return k;
  }

 private:
  GroupHom hom_;
};

/// x -> g x g^-1
inline GroupAut conjugation_aut(const GroupPtr& G, Element g) {
  std::vector<Element> im(G->order());
  for (Element x = 0; x < im.size(); ++x) im[x] = G->conj(g, x);
  return GroupAut(GroupHom(G, G, std::move(im), "conj(" + G->label(g) + ")"));
}

inline GroupAut inversion_aut(const GroupPtr& G) {
  if (!G->is_abelian()) throw GroupError("inversion is an automorphism only of abelian groups");
  std::vector<Element> im(G->order());
  for (Element x = 0; x < im.size(); ++x) im[x] = G->inv(x);
  return GroupAut(GroupHom(G, G, std::move(im), "inv"));
}

/// The automorphism induced on a subgroup (given by an injective map into G)
/// that the automorphism of G leaves invariant.
inline GroupAut restrict_aut(const GroupAut& a, const GroupHom& embedding) {
  if (!embedding.injective()) throw GroupError("restrict_aut: subgroup map is not injective");
  if (embedding.target() != a.group()) throw GroupError("restrict_aut: subgroup of a different group");
  const auto& H = embedding.source();
  std::vector<Element> im(H->order());
  for (Element h = 0; h < H->order(); ++h) {
    Element y = a(embedding(h));
    bool found = false;
    for (Element h2 = 0; h2 < H->order() && !found; ++h2)
      if (embedding(h2) == y) {
        im[h] = h2;
        found = true;
      }
    if (!found)
      throw GroupError("subgroup is not invariant under " + a.hom().name() + ": " + a.group()->label(embedding(h)) +
                       " maps outside it");
  }
  return GroupAut(GroupHom(H, H, std::move(im), a.hom().name() + "|"));
}

}  // namespace herbert
