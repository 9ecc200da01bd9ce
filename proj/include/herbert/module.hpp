#pragma once

#include "herbert/representation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace herbert {

/// A lattice Z^rank with a left action of a finite group by unimodular
/// matrices.  Over a Z-extension the fiber action is stored together with the
/// matrix of the Z-generator, which must satisfy a^-1 g a = theta(g).
class GModule {
 public:
  GModule() = default;
  GModule(GroupPtr G, const std::vector<IntMatrix>& generator_action, std::string name)
      : group_(std::move(G)), name_(std::move(name)) {
    rank_ = generator_action.empty() ? 1 : generator_action[0].rows();
    std::string why;
    auto all = rep_element_images(*group_, generator_action, rank_, &why);
    if (!all) throw GroupError("module " + name_ + ": action does not respect the relations of " + group_->name() + ": " + why);
    for (const auto& m : generator_action)
      if (!is_unimodular(m)) throw GroupError("module " + name_ + ": action matrix is not unimodular");
    action_ = std::move(*all);
  }
  GModule(ZExtension E, const std::vector<IntMatrix>& fiber_action, IntMatrix theta_action, std::string name)
      : GModule(E.fiber(), fiber_action, std::move(name)) {
    if (theta_action.rows() != rank_ || theta_action.cols() != rank_ || !is_unimodular(theta_action))
      throw GroupError("module " + name_ + ": Z-generator matrix must be unimodular of rank " + std::to_string(rank_));
    for (Element g = 0; g < group_->order(); ++g)
      if (action_[g] * theta_action != theta_action * action_[E.theta()(g)])
        throw GroupError("module " + name_ + ": Z-generator action is incompatible with theta at " + group_->label(g));
    extension_ = std::move(E);
    theta_ = std::move(theta_action);
  }

  const GroupPtr& group() const { return group_; }
  const std::optional<ZExtension>& extension() const { return extension_; }
  bool over_extension() const { return extension_.has_value(); }
  std::size_t rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const IntMatrix& act(Element g) const { return action_[g]; }
  const IntMatrix& theta_action() const {
    if (!theta_) throw GroupError("module " + name_ + " is not a module over a Z-extension");
    return *theta_;
  }
  std::vector<IntMatrix> generator_action() const {
    std::vector<IntMatrix> out;
    for (const auto& g : group_->generators()) out.push_back(action_[g.element]);
    return out;
  }
  bool is_trivial() const {
    for (const auto& m : action_)
      if (m != IntMatrix::identity(rank_)) return false;
    return !theta_ || *theta_ == IntMatrix::identity(rank_);
  }
  /// Same group and same action (names are ignored).
  bool same_action(const GModule& o) const {
    if (group_ != o.group_ || rank_ != o.rank_ || action_ != o.action_) return false;
    if (theta_.has_value() != o.theta_.has_value()) return false;
    return !theta_ || *theta_ == *o.theta_;
  }

 private:
  GroupPtr group_;
  std::optional<ZExtension> extension_;
  std::size_t rank_ = 1;
  std::vector<IntMatrix> action_;
  std::optional<IntMatrix> theta_;
  std::string name_;
};

inline GModule trivial_module(const GroupPtr& G) {
  return GModule(G, std::vector<IntMatrix>(G->generators().size(), IntMatrix::identity(1)), "Z");
}
inline GModule trivial_module(const ZExtension& E) {
  return GModule(E, std::vector<IntMatrix>(E.fiber()->generators().size(), IntMatrix::identity(1)),
                 IntMatrix::identity(1), "Z");
}
/// Z^tw: the fiber acts trivially, the Z-generator by -1.
inline GModule sign_module(const ZExtension& E) {
  return GModule(E, std::vector<IntMatrix>(E.fiber()->generators().size(), IntMatrix::identity(1)),
                 IntMatrix{{-1}}, "Ztw");
}

inline GModule tensor(const GModule& M, const GModule& N, std::string name = {}) {
  if (M.group() != N.group()) throw GroupError("tensor: modules over different groups");
  if (name.empty()) name = M.name() + "(x)" + N.name();
  std::vector<IntMatrix> gens;
  for (const auto& g : M.group()->generators()) gens.push_back(kron(M.act(g.element), N.act(g.element)));
  if (M.over_extension() && N.over_extension())
    return GModule(*M.extension(), gens, kron(M.theta_action(), N.theta_action()), std::move(name));
  return GModule(M.group(), gens, std::move(name));
}

inline GModule tensor_power(const GModule& M, std::size_t k) {
  const std::string name = k == 0 ? "Z" : (k == 1 ? M.name() : M.name() + "^" + std::to_string(k));
  std::vector<IntMatrix> gens(M.group()->generators().size(), IntMatrix::identity(1));
  IntMatrix theta = IntMatrix::identity(1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) gens[s] = kron(gens[s], M.act(M.group()->generators()[s].element));
    if (M.over_extension()) theta = kron(theta, M.theta_action());
  }
  if (M.over_extension()) return GModule(*M.extension(), gens, theta, name);
  return GModule(M.group(), gens, name);
}

/// Pull back along phi : H -> G (G the group, or the fiber, of M).  The result
/// is a module over the finite group H.
inline GModule restrict_module(const GModule& M, const GroupHom& phi, std::string name = {}) {
  if (phi.target() != M.group()) throw GroupError("restrict_module: homomorphism does not land in the module's group");
  std::vector<IntMatrix> gens;
  for (const auto& h : phi.source()->generators()) gens.push_back(M.act(phi(h.element)));
  return GModule(phi.source(), gens, name.empty() ? M.name() : std::move(name));
}

/// Pull back along a morphism of Z-extensions.
inline GModule restrict_module(const GModule& M, const ExtensionHom& phi, std::string name = {}) {
  if (!M.over_extension()) throw GroupError("restrict_module: module is not over a Z-extension");
  std::vector<IntMatrix> gens;
  for (const auto& h : phi.source().fiber()->generators()) gens.push_back(M.act(phi.fiber_map()(h.element)));
  return GModule(phi.source(), gens, M.theta_action(), name.empty() ? M.name() : std::move(name));
}

/// The fiber part of a module over a Z-extension.
inline GModule fiber_module(const GModule& M) { return restrict_module(M, identity_hom(M.group())); }

/// CLI names: "Z", "Ztw", "Ztw^k".
inline GModule module_by_name(const std::string& name, const GroupPtr& G, const std::optional<ZExtension>& E) {
  if (name == "Z") return E ? trivial_module(*E) : trivial_module(G);
  if (name.rfind("Ztw", 0) == 0) {
    if (!E) throw GroupError("module Ztw needs a Z-extension");
    std::size_t k = 1;
    if (name.size() > 3) {
      if (name[3] != '^' || name.size() == 4) throw GroupError("unknown module '" + name + "'");
      try {
        k = std::stoul(name.substr(4));
      } catch (...) {
        throw GroupError("unknown module '" + name + "'");
      }
    }
    return tensor_power(sign_module(*E), k);
  }
  throw GroupError("unknown module '" + name + "'");
}

}  // namespace herbert
