#pragma once

#include "herbert/normal_form.hpp"

#include <memory>
#include <optional>
#include <stdexcept>

namespace herbert {

/// The abelian group L / N for lattices N ⊂ L ⊂ Z^ambient, given by generating
/// columns, together with canonical (Smith) coordinates on it.
class Subquotient {
 public:
  Subquotient() = default;
  Subquotient(const IntMatrix& lattice_gens, const IntMatrix& sub_gens) : ambient_(lattice_gens.rows()) {
    if (sub_gens.cols() && sub_gens.rows() != ambient_)
      throw std::invalid_argument("Subquotient: generator sets live in different ambient lattices");
    basis_ = lattice_gens.cols() ? row_lattice_basis(lattice_gens.transpose()).transpose() : IntMatrix(ambient_, 0);
    if (basis_.cols() == 0) basis_ = IntMatrix(ambient_, 0);
    solver_ = LinearSolver(basis_);
    IntMatrix rel(basis_.cols(), sub_gens.cols());
    for (std::size_t j = 0; j < sub_gens.cols(); ++j) {
      auto c = solver_.solve(sub_gens.col(j));
      if (!c) throw std::logic_error("Subquotient: sub-lattice generator outside the lattice");
      rel.set_col(j, *c);
    }
    pres_ = cokernel_presentation(basis_.cols(), rel);
  }

  std::size_t ambient() const { return ambient_; }
  const AbelianPresentation& presentation() const { return pres_; }
  /// Z-basis of L as columns.
  const IntMatrix& lattice_basis() const { return basis_; }
  std::size_t num_generators() const { return pres_.num_generators(); }

  /// Canonical coordinates of x, or nullopt when x is not in L.
  std::optional<IntVector> coords(const IntVector& x) const {
    auto c = solver_.solve(x);
    if (!c) return std::nullopt;
    return pres_.project(*c);
  }
  IntVector coords_or_throw(const IntVector& x) const {
    auto c = coords(x);
    if (!c) throw std::logic_error("Subquotient: vector is not in the lattice");
    return *c;
  }

  /// Ambient representative of canonical generator i.
  IntVector generator(std::size_t i) const { return basis_ * pres_.section.col(i); }
  /// Ambient representative of the element with canonical coordinates c.
  IntVector lift(const IntVector& c) const { return basis_ * (pres_.section * c); }

 private:
  std::size_t ambient_ = 0;
  IntMatrix basis_;
  LinearSolver solver_;
  AbelianPresentation pres_;
};

/// Diagonal relation matrix of a canonical presentation (zero columns for free summands).
inline IntMatrix relation_matrix(const AbelianPresentation& a) {
  const std::size_t k = a.num_generators();
  IntMatrix d(k, k);
  for (std::size_t i = 0; i < a.invariant_factors.size(); ++i) d(i, i) = a.invariant_factors[i];
  return d;
}

/// Cokernel of f : A -> B between canonically presented groups, as a
/// subquotient of Z^{#gens B}.
inline Subquotient cokernel_of(const AbelianPresentation& target, const IntMatrix& f) {
  const std::size_t k = target.num_generators();
  return Subquotient(IntMatrix::identity(k), hstack(relation_matrix(target), f.cols() ? f : IntMatrix(k, 0)));
}

/// Kernel of f : A -> B between canonically presented groups, as a subquotient
/// of Z^{#gens A}.
inline Subquotient kernel_of(const AbelianPresentation& source, const AbelianPresentation& target, const IntMatrix& f) {
  const std::size_t ks = source.num_generators(), kt = target.num_generators();
  if (f.rows() != kt || f.cols() != ks) throw std::invalid_argument("kernel_of: matrix shape does not match the groups");
  IntMatrix joint = hstack(f, relation_matrix(target));
  IntMatrix K = kernel_basis(joint);
  IntMatrix gens = K.rows() ? K.block(0, 0, ks, K.cols()) : IntMatrix(ks, 0);
  return Subquotient(gens, relation_matrix(source));
}

}  // namespace herbert
