#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "covspec/cov_spectrum.hpp"
#include "covspec/lattice.hpp"

namespace covspec {

/// Flat torus as a marked group: the deck group is Z^n, m(g) = |g|_Q, and
/// the subgroup generated by a finite set is its Z-span (conjugation is
/// trivial). Every query is decided exactly.
class TorusBackend {
 public:
  using Element = LatticeVector;

  class Closure {
   public:
    explicit Closure(Sublattice sub) : sub_(std::move(sub)) {}
    Membership contains(const Element& g) const { return sub_.contains(g) ? Membership::in : Membership::out; }
    Tri is_whole() const { return sub_.is_whole() ? Tri::yes : Tri::no; }
    std::optional<QuotientInvariant> invariant() const {
      return QuotientInvariant::lattice(sub_.rank(), sub_.gram_determinant());
    }
    const Sublattice& sublattice() const noexcept { return sub_; }

   private:
    Sublattice sub_;
  };

  explicit TorusBackend(Lattice lattice) : lattice_(std::move(lattice)) {}

  const Lattice& lattice() const noexcept { return lattice_; }
  Unit unit() const noexcept { return lattice_.unit(); }
  int dimension() const noexcept { return lattice_.dimension(); }

  Element identity() const { return Element(static_cast<std::size_t>(dimension()), 0); }
  bool is_identity(const Element& g) const;
  Element compose(const Element& a, const Element& b) const;
  Element invert(const Element& g) const;
  LengthValue m_value(const Element& g) const { return lattice_.m_value(g); }

  /// Shells up to `cutoff`, one of each pair +-g.
  std::vector<ValueClasses<Element>> enumerate_values(const LengthValue& cutoff) const;
  Closure close(const std::vector<Element>& generators) const { return Closure(Sublattice(dimension(), generators)); }
  nlohmann::json describe(const Element& g) const { return g; }

  /// A delta bound past which the chain is certain to be complete: half the
  /// longest basis vector.
  LengthValue default_cutoff() const { return lattice_.max_basis_length().half(); }

 private:
  Lattice lattice_;
};

static_assert(MarkedGroupBackend<TorusBackend>);

}  // namespace covspec
