#pragma once

#include "herbert/group.hpp"
#include "herbert/integer.hpp"

#include <map>
#include <string>
#include <vector>

namespace herbert {

/// Element of the integral group ring Z[G], dense over the elements of G.
class GRingElement {
 public:
  GRingElement() = default;
  explicit GRingElement(GroupPtr G) : group_(std::move(G)), coeffs_(group_->order()) {}
  static GRingElement basis(GroupPtr G, Element g, Integer c = 1) {
    GRingElement x(std::move(G));
    x.coeffs_[g] = std::move(c);
    return x;
  }
  /// 1 + g + g^2 + ... over the cyclic subgroup generated by g.
  static GRingElement norm(GroupPtr G, Element g) {
    GRingElement x(G);
    Element y = G->identity();
    do {
      x.coeffs_[y] += 1;
      y = G->mul(y, g);
    } while (y != G->identity());
    return x;
  }

  const GroupPtr& group() const { return group_; }
  const Integer& operator[](Element g) const { return coeffs_[g]; }
  Integer& operator[](Element g) { return coeffs_[g]; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }
  Integer augmentation() const {
    Integer s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  GRingElement& operator+=(const GRingElement& o) {
    if (coeffs_.empty()) *this = GRingElement(o.group_);
    for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] += o.coeffs_[g];
    return *this;
  }
  GRingElement& operator-=(const GRingElement& o) {
    if (coeffs_.empty()) *this = GRingElement(o.group_);
    for (std::size_t g = 0; g < coeffs_.size(); ++g) coeffs_[g] -= o.coeffs_[g];
    return *this;
  }
  friend GRingElement operator+(GRingElement a, const GRingElement& b) { return a += b; }
  friend GRingElement operator-(GRingElement a, const GRingElement& b) { return a -= b; }
  friend GRingElement operator*(const GRingElement& a, const GRingElement& b) {
    GRingElement r(a.group_);
    const auto& G = *a.group_;
    for (Element x = 0; x < G.order(); ++x) {
      if (a.coeffs_[x].is_zero()) continue;
      for (Element y = 0; y < G.order(); ++y)
        if (!b.coeffs_[y].is_zero()) r.coeffs_[G.mul(x, y)] += a.coeffs_[x] * b.coeffs_[y];
    }
    return r;
  }
  friend bool operator==(const GRingElement& a, const GRingElement& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const {
    std::string s;
    for (Element g = 0; g < coeffs_.size(); ++g) {
      if (coeffs_[g].is_zero()) continue;
      std::string c = coeffs_[g].str();
      if (!s.empty() && coeffs_[g] > 0) s += "+";
      if (c == "1") c.clear();
      if (c == "-1") c = "-";
      s += c + "[" + group_->label(g) + "]";
    }
    return s.empty() ? "0" : s;
  }

 private:
  GroupPtr group_;
  std::vector<Integer> coeffs_;
};

/// Z-linear combination of the Z-basis elements g·e_j of a free Z[G]-module;
/// key = j * |G| + g.
using Chain = std::map<std::size_t, Integer>;

inline void chain_add(Chain& c, std::size_t key, const Integer& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

inline void chain_axpy(Chain& c, const Integer& a, const Chain& x) {
  for (const auto& [k, v] : x) chain_add(c, k, a * v);
}

}  // namespace herbert
