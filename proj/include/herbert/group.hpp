#pragma once

// Finite groups stored extensionally by their multiplication tables.

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace herbert {

using Element = std::uint32_t;

struct GroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Generator {
  std::string name;
  Element element;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Recorded when a group is built as A x B; such tables are associative by
/// construction and may exceed the order limit (internal use, e.g. G x G).
struct ProductFactors {
  GroupPtr first, second;
};

class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 64;
  static constexpr std::size_t kMaxProductOrder = 4096;

  FiniteGroup(std::string name, std::vector<std::vector<Element>> mult, std::vector<std::string> labels,
              std::vector<Generator> generators, std::optional<ProductFactors> factors = std::nullopt)
      : name_(std::move(name)),
        mult_(std::move(mult)),
        labels_(std::move(labels)),
        gens_(std::move(generators)),
        factors_(std::move(factors)) {
    validate();
  }

  const std::optional<ProductFactors>& factors() const { return factors_; }

  const std::string& name() const { return name_; }
  std::size_t order() const { return mult_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mult_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  Element conj(Element g, Element x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  Element power(Element g, long long k) const {
    if (k < 0) return power(inv(g), -k);
    Element r = identity_;
    for (long long i = 0; i < k; ++i) r = mul(r, g);
    return r;
  }
  std::size_t element_order(Element g) const {
    std::size_t k = 1;
    for (Element x = g; x != identity_; x = mul(x, g)) ++k;
    return k;
  }
  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }
  /// A generator of the group when it is cyclic.
  std::optional<Element> cyclic_generator() const {
    for (const auto& g : gens_)
      if (element_order(g.element) == order()) return g.element;
    for (Element g = 0; g < order(); ++g)
      if (element_order(g) == order()) return g;
    return std::nullopt;
  }

  const std::vector<Generator>& generators() const { return gens_; }
  Element generator(const std::string& name) const {
    for (const auto& g : gens_)
      if (g.name == name) return g.element;
    throw GroupError("group " + name_ + " has no generator named '" + name + "'");
  }
  const std::string& label(Element g) const { return labels_[g]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Element> find_label(const std::string& l) const {
    for (Element g = 0; g < order(); ++g)
      if (labels_[g] == l) return g;
    return std::nullopt;
  }
  Element element(const std::string& l) const {
    if (auto g = find_label(l)) return *g;
    throw GroupError("group " + name_ + " has no element labelled '" + l + "'");
  }

  /// Elements generated by the given ones.
  std::vector<Element> closure(const std::vector<Element>& gens) const {
    std::vector<bool> seen(order(), false);
    std::vector<Element> out{identity_};
    seen[identity_] = true;
    for (std::size_t k = 0; k < out.size(); ++k)
      for (Element s : gens) {
        Element y = mul(out[k], s);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    return out;
  }

  /// Shortest word in the generators (by breadth-first search) for every element.
  std::vector<std::vector<std::size_t>> words() const {
    std::vector<std::vector<std::size_t>> w(order());
    std::vector<bool> seen(order(), false);
    std::vector<Element> queue{identity_};
    seen[identity_] = true;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        Element y = mul(queue[k], gens_[s].element);
        if (seen[y]) continue;
        seen[y] = true;
        w[y] = w[queue[k]];
        w[y].push_back(s);
        queue.push_back(y);
      }
    return w;
  }

 private:
  void validate() {
    const std::size_t n = mult_.size();
    if (n == 0) throw GroupError(name_ + ": empty multiplication table");
    if (n > (factors_ ? kMaxProductOrder : kMaxOrder))
      throw GroupError(name_ + ": order " + std::to_string(n) + " exceeds the limit of 64");
    if (labels_.size() != n) throw GroupError(name_ + ": label count does not match the order");
    for (const auto& row : mult_) {
      if (row.size() != n) throw GroupError(name_ + ": multiplication table is not square");
      for (Element x : row)
        if (x >= n) throw GroupError(name_ + ": multiplication table entry out of range");
    }
    std::optional<Element> e;
    for (Element a = 0; a < n && !e; ++a) {
      bool ok = true;
      for (Element b = 0; b < n && ok; ++b) ok = mult_[a][b] == b && mult_[b][a] == b;
      if (ok) e = a;
    }
    if (!e) throw GroupError(name_ + ": no identity element");
    identity_ = *e;
    inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
      bool found = false;
      for (Element b = 0; b < n && !found; ++b)
        if (mult_[a][b] == identity_ && mult_[b][a] == identity_) {
          inverse_[a] = b;
          found = true;
        }
      if (!found) throw GroupError(name_ + ": element " + labels_[a] + " has no inverse");
    }
    for (Element a = 0; a < n && !factors_; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
            throw GroupError(name_ + ": multiplication is not associative at (" + labels_[a] + ", " + labels_[b] + ", " +
                             labels_[c] + ")");
    std::vector<Element> gen_elems;
    for (const auto& g : gens_) {
      if (g.element >= n) throw GroupError(name_ + ": generator out of range");
      gen_elems.push_back(g.element);
    }
    if (closure(gen_elems).size() != n) throw GroupError(name_ + ": the named generators do not generate the group");
  }

  std::string name_;
  std::vector<std::vector<Element>> mult_;
  std::vector<std::string> labels_;
  std::vector<Generator> gens_;
  std::optional<ProductFactors> factors_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

// ---------------------------------------------------------------------------
// Constructions

inline GroupPtr trivial_group() {
  return std::make_shared<FiniteGroup>("1", std::vector<std::vector<Element>>{{0}}, std::vector<std::string>{"e"},
                                       std::vector<Generator>{});
}

/// Z/n with element k labelled "k" and one generator.
inline GroupPtr cyclic_group(std::size_t n, const std::string& gen_name = "g") {
  if (n == 0) throw GroupError("Cyclic(0) is not a finite group");
  std::vector<std::vector<Element>> mult(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) mult[a][b] = static_cast<Element>((a + b) % n);
  }
  std::vector<Generator> gens;
  if (n > 1) gens.push_back({gen_name, 1});
  return std::make_shared<FiniteGroup>("Z" + std::to_string(n), std::move(mult), std::move(labels), std::move(gens));
}

/// A x B with (a,b) stored at index a*|B| + b.
inline GroupPtr direct_product(const GroupPtr& pa, const GroupPtr& pb, std::string name = {}) {
  const FiniteGroup &A = *pa, &B = *pb;
  const std::size_t na = A.order(), nb = B.order(), n = na * nb;
  if (n > FiniteGroup::kMaxProductOrder) throw GroupError("direct product is too large");
  std::vector<std::vector<Element>> mult(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element a1 = 0; a1 < na; ++a1)
    for (Element b1 = 0; b1 < nb; ++b1) {
      const Element x = a1 * nb + b1;
      labels[x] = "(" + A.label(a1) + "," + B.label(b1) + ")";
      for (Element a2 = 0; a2 < na; ++a2)
        for (Element b2 = 0; b2 < nb; ++b2) mult[x][a2 * nb + b2] = A.mul(a1, a2) * nb + B.mul(b1, b2);
    }
  std::vector<Generator> gens;
  auto clash = [&](const std::string& s) {
    for (const auto& g : B.generators())
      if (g.name == s) return true;
    return false;
  };
  bool rename = false;
  for (const auto& g : A.generators()) rename = rename || clash(g.name);
  for (const auto& g : A.generators())
    gens.push_back({rename ? g.name + "1" : g.name, static_cast<Element>(g.element * nb + B.identity())});
  for (const auto& g : B.generators())
    gens.push_back({rename ? g.name + "2" : g.name, static_cast<Element>(A.identity() * nb + g.element)});
  if (name.empty()) name = A.name() + "x" + B.name();
  return std::make_shared<FiniteGroup>(std::move(name), std::move(mult), std::move(labels), std::move(gens),
                                       ProductFactors{pa, pb});
}

/// X ⋊ Z/2 where the generator t acts by the involution sigma (given on
/// elements).  Element (x,s) lives at index 2x + s; (x,s)(y,r) = (x sigma^s(y), s+r).
inline GroupPtr semidirect_z2(const FiniteGroup& X, const std::vector<Element>& sigma, std::string name = {}) {
  const std::size_t nx = X.order(), n = 2 * nx;
  if (sigma.size() != nx) throw GroupError("SemidirectZ2: involution has wrong size");
  for (Element x = 0; x < nx; ++x) {
    if (sigma[sigma[x]] != x) throw GroupError("SemidirectZ2: automorphism is not of order 2");
    for (Element y = 0; y < nx; ++y)
      if (sigma[X.mul(x, y)] != X.mul(sigma[x], sigma[y])) throw GroupError("SemidirectZ2: map is not an automorphism");
  }
  std::vector<std::vector<Element>> mult(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element x = 0; x < nx; ++x)
    for (Element s = 0; s < 2; ++s) {
      labels[2 * x + s] = "(" + X.label(x) + "," + std::to_string(s) + ")";
      for (Element y = 0; y < nx; ++y)
        for (Element r = 0; r < 2; ++r) {
          Element ys = s ? sigma[y] : y;
          mult[2 * x + s][2 * y + r] = 2 * X.mul(x, ys) + ((s + r) % 2);
        }
    }
  std::vector<Generator> gens;
  for (const auto& g : X.generators()) gens.push_back({g.name, 2 * g.element});
  gens.push_back({"t", static_cast<Element>(2 * X.identity() + 1)});
  if (name.empty()) name = "(" + X.name() + ")sdZ2";
  return std::make_shared<FiniteGroup>(std::move(name), std::move(mult), std::move(labels), std::move(gens));
}

/// Q8 = {±1, ±i, ±j, ±k}; index 2u + s for unit u in (1,i,j,k) and sign bit s.
inline GroupPtr quaternion_group() {
  // unit product table: u*v = sign * w, units 0=1, 1=i, 2=j, 3=k
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<std::vector<Element>> mult(8, std::vector<Element>(8));
  std::vector<std::string> labels(8);
  for (int u = 0; u < 4; ++u)
    for (int s = 0; s < 2; ++s) {
      labels[2 * u + s] = std::string(s ? "-" : "") + names[u];
      for (int v = 0; v < 4; ++v)
        for (int r = 0; r < 2; ++r) mult[2 * u + s][2 * v + r] = 2 * unit[u][v] + ((s + r + neg[u][v]) % 2);
    }
  return std::make_shared<FiniteGroup>("Q8", std::move(mult), std::move(labels),
                                       std::vector<Generator>{{"i", 2}, {"j", 4}});
}

// ---------------------------------------------------------------------------
// Expression language:  Cyclic(n) | Product(e, e) | SemidirectZ2(e, aut) |
// Quaternion8 | Trivial | preset.  aut is one of swap, inverse, identity.
// Presets: Z2, Z4, Q8, Z4xZ2, Z4xZ4, Z4xZ4_sd_Z2.  A JSON form mirrors it:
// {"Cyclic": n}, {"Product": [e, e]}, {"SemidirectZ2": [e, "swap"]}, "Q8".

struct GroupExpr {
  enum class Kind { Trivial, Cyclic, Product, SemidirectZ2, Quaternion8, Preset } kind = Kind::Trivial;
  std::size_t n = 0;
  std::string aut;  // SemidirectZ2
  std::string preset;
  std::vector<GroupExpr> args;

  std::string to_string() const {
    switch (kind) {
      case Kind::Trivial: return "Trivial";
      case Kind::Cyclic: return "Cyclic(" + std::to_string(n) + ")";
      case Kind::Product: return "Product(" + args[0].to_string() + "," + args[1].to_string() + ")";
      case Kind::SemidirectZ2: return "SemidirectZ2(" + args[0].to_string() + "," + aut + ")";
      case Kind::Quaternion8: return "Quaternion8";
      case Kind::Preset: return preset;
    }
    return {};
  }
  friend bool operator==(const GroupExpr& a, const GroupExpr& b) { return a.to_string() == b.to_string(); }
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string s) : s_(std::move(s)) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw GroupError("malformed group spec '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (b == pos_) fail("expected a name");
    return s_.substr(b, pos_ - b);
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  GroupExpr expr() {
    std::string id = ident();
    GroupExpr e;
    if (id == "Cyclic") {
      expect('(');
      std::string num = ident();
      try {
        e.n = std::stoul(num);
      } catch (...) {
        fail("expected an integer order");
      }
      expect(')');
      e.kind = GroupExpr::Kind::Cyclic;
    } else if (id == "Product") {
      expect('(');
      e.args.push_back(expr());
      expect(',');
      e.args.push_back(expr());
      expect(')');
      e.kind = GroupExpr::Kind::Product;
    } else if (id == "SemidirectZ2") {
      expect('(');
      e.args.push_back(expr());
      expect(',');
      e.aut = ident();
      expect(')');
      e.kind = GroupExpr::Kind::SemidirectZ2;
    } else if (id == "Quaternion8") {
      e.kind = GroupExpr::Kind::Quaternion8;
    } else if (id == "Trivial") {
      e.kind = GroupExpr::Kind::Trivial;
    } else {
      e.kind = GroupExpr::Kind::Preset;
      e.preset = id;
    }
    return e;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline GroupExpr expr_from_json(const nlohmann::json& j) {
  GroupExpr e;
  if (j.is_string()) return ExprParser(j.get<std::string>()).parse();
  if (!j.is_object() || j.size() != 1) throw GroupError("malformed JSON group spec: " + j.dump());
  const auto& [key, val] = *j.items().begin();
  if (key == "Cyclic" && val.is_number_unsigned()) {
    e.kind = GroupExpr::Kind::Cyclic;
    e.n = val.get<std::size_t>();
  } else if (key == "Product" && val.is_array() && val.size() == 2) {
    e.kind = GroupExpr::Kind::Product;
    e.args = {expr_from_json(val[0]), expr_from_json(val[1])};
  } else if (key == "SemidirectZ2" && val.is_array() && val.size() == 2 && val[1].is_string()) {
    e.kind = GroupExpr::Kind::SemidirectZ2;
    e.args = {expr_from_json(val[0])};
    e.aut = val[1].get<std::string>();
  } else {
    throw GroupError("malformed JSON group spec: " + j.dump());
  }
  return e;
}

}  // namespace detail

inline GroupExpr parse_group_expr(const std::string& spec) {
  std::size_t k = spec.find_first_not_of(" \t\n");
  if (k != std::string::npos && (spec[k] == '{' || spec[k] == '"')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::exception& ex) {
      throw GroupError(std::string("malformed JSON group spec: ") + ex.what());
    }
    return detail::expr_from_json(j);
  }
  return detail::ExprParser(spec).parse();
}

inline GroupPtr build_group(const GroupExpr& e);

namespace detail {

inline std::vector<Element> named_involution(const GroupExpr& base, const FiniteGroup& X, const std::string& aut) {
  std::vector<Element> sigma(X.order());
  if (aut == "identity") {
    for (Element x = 0; x < X.order(); ++x) sigma[x] = x;
  } else if (aut == "inverse") {
    if (!X.is_abelian()) throw GroupError("SemidirectZ2: 'inverse' needs an abelian group");
    for (Element x = 0; x < X.order(); ++x) sigma[x] = X.inv(x);
  } else if (aut == "swap") {
    // swap needs Product(A, A); the product stores (a,b) at a*|A| + b
    bool ok = base.kind == GroupExpr::Kind::Product && base.args[0] == base.args[1];
    std::size_t na = 0;
    if (base.kind == GroupExpr::Kind::Preset && (base.preset == "Z4xZ4")) {
      ok = true;
      na = 4;
    }
    if (!ok) throw GroupError("SemidirectZ2: 'swap' needs a product of a group with itself");
    if (!na) na = build_group(base.args[0])->order();
    for (Element x = 0; x < X.order(); ++x) sigma[x] = static_cast<Element>((x % na) * na + x / na);
  } else {
    throw GroupError("SemidirectZ2: unknown automorphism '" + aut + "'");
  }
  return sigma;
}

}  // namespace detail

inline GroupPtr build_group(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Trivial: return trivial_group();
    case K::Cyclic: return cyclic_group(e.n);
    case K::Quaternion8: return quaternion_group();
    case K::Product: {
      auto a = build_group(e.args[0]), b = build_group(e.args[1]);
      if (a->order() * b->order() > FiniteGroup::kMaxOrder) throw GroupError("group order exceeds the limit of 64");
      return direct_product(a, b);
    }
    case K::SemidirectZ2: {
      auto x = build_group(e.args[0]);
      if (2 * x->order() > FiniteGroup::kMaxOrder) throw GroupError("group order exceeds the limit of 64");
      return semidirect_z2(*x, detail::named_involution(e.args[0], *x, e.aut));
    }
    case K::Preset: {
      const std::string& p = e.preset;
      if (p == "Z2") return cyclic_group(2, "t");
      if (p == "Z4") return cyclic_group(4, "b");
      if (p == "Q8") return quaternion_group();
      if (p == "Z4xZ2") return direct_product(cyclic_group(4, "b"), cyclic_group(2, "t"), "Z4xZ2");
      if (p == "Z4xZ4") return direct_product(cyclic_group(4, "b"), cyclic_group(4, "b"), "Z4xZ4");
      if (p == "Z4xZ4_sd_Z2") {
        auto x = direct_product(cyclic_group(4, "b"), cyclic_group(4, "b"), "Z4xZ4");
        GroupExpr base;
        base.kind = K::Preset;
        base.preset = "Z4xZ4";
        return semidirect_z2(*x, detail::named_involution(base, *x, "swap"), "Z4xZ4_sd_Z2");
      }
      throw GroupError("unknown group preset '" + p + "'");
    }
  }
  throw GroupError("unreachable group expression");
}

inline GroupPtr build_group(const std::string& spec) { return build_group(parse_group_expr(spec)); }

}  // namespace herbert
