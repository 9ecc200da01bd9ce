#pragma once

#include "herbert/hom.hpp"

namespace herbert {

/// G ⋊ Z, never materialized: the fiber G and the automorphism theta by which
/// the generator of Z acts.  Conjugation convention: theta(g) = a^-1 g a for
/// the Z-generator a.
class ZExtension {
 public:
  ZExtension() = default;
  ZExtension(GroupAut theta, std::string name = {}) : theta_(std::move(theta)), name_(std::move(name)) {
    if (name_.empty()) name_ = fiber()->name() + "⋊Z";
  }
  const GroupPtr& fiber() const { return theta_.group(); }
  const GroupAut& theta() const { return theta_; }
  const std::string& name() const { return name_; }

 private:
  GroupAut theta_;
  std::string name_;
};

/// A morphism of Z-extensions sending the Z-generator to the Z-generator:
/// given by a fiber homomorphism phi with phi∘theta_source = theta_target∘phi.
class ExtensionHom {
 public:
  ExtensionHom(ZExtension source, ZExtension target, GroupHom fiber_map)
      : src_(std::move(source)), tgt_(std::move(target)), phi_(std::move(fiber_map)) {
    if (phi_.source() != src_.fiber() || phi_.target() != tgt_.fiber())
      throw GroupError("extension morphism: fiber map has the wrong source or target");
    for (Element g = 0; g < src_.fiber()->order(); ++g)
      if (phi_(src_.theta()(g)) != tgt_.theta()(phi_(g)))
        throw GroupError("extension morphism: fiber map does not intertwine the Z-actions at " +
                         src_.fiber()->label(g));
  }
  const ZExtension& source() const { return src_; }
  const ZExtension& target() const { return tgt_; }
  const GroupHom& fiber_map() const { return phi_; }

 private:
  ZExtension src_, tgt_;
  GroupHom phi_;
};

/// The sub-extension H ⋊ Z for a theta-invariant subgroup H of the fiber.
inline ZExtension restrict_extension(const ZExtension& E, const GroupHom& subgroup, std::string name = {}) {
  return ZExtension(restrict_aut(E.theta(), subgroup), std::move(name));
}

/// Inclusion of a sub-extension built by restrict_extension.
inline ExtensionHom extension_inclusion(const ZExtension& sub, const ZExtension& E, const GroupHom& subgroup) {
  return ExtensionHom(sub, E, subgroup);
}

}  // namespace herbert
