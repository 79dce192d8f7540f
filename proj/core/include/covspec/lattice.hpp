#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covspec/decision.hpp"
#include "covspec/length.hpp"

namespace covspec {

/// Integer coordinate vector of a lattice element (a deck transformation of
/// the torus).
using LatticeVector = std::vector<long long>;

inline constexpr int kDefaultMaxDimension = 6;
inline constexpr std::size_t kDefaultMaxShellVectors = 2'000'000;

/// Flat torus R^n / Lambda given by the Gram form of a basis of Lambda.
///
/// Exact lattices carry a rational Gram matrix and produce exact_quadratic
/// m-values. Lattices built from transcendental data (rhombic angles) carry a
/// double Gram matrix; their norms are grouped with a relative tolerance of
/// kNormTolerance.
class Lattice {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Rows are basis vectors; Gram = B B^T.
  static Lattice from_basis(const std::vector<std::vector<Rational>>& rows, Unit unit = Unit::one,
                            int max_dimension = kDefaultMaxDimension);
  static Lattice from_gram(std::vector<std::vector<Rational>> gram, Unit unit = Unit::one,
                           int max_dimension = kDefaultMaxDimension);
  /// Orthogonal lattice with the given circumferences.
  static Lattice diagonal(const std::vector<Rational>& circumferences, Unit unit = Unit::one);
  /// Unit vectors at angle theta.
  static Lattice rhombic(double theta);
  static Lattice from_float_gram(std::vector<std::vector<double>> gram, Unit unit = Unit::one,
                                 int max_dimension = kDefaultMaxDimension);

  int dimension() const noexcept { return n_; }
  bool is_exact() const noexcept { return exact_; }
  Unit unit() const noexcept { return unit_; }
  const std::vector<std::vector<double>>& gram_double() const noexcept { return gram_d_; }
  /// Exact lattices only.
  const std::vector<std::vector<Rational>>& gram() const;

  /// g^T Q g.
  Rational norm_squared(const LatticeVector& g) const;
  double norm_squared_double(const LatticeVector& g) const;
  LengthValue m_value(const LatticeVector& g) const;

  /// Largest basis-vector length; every basis vector has m at most this.
  LengthValue max_basis_length() const;

 private:
  Lattice() = default;
  void finish(int max_dimension);

  int n_ = 0;
  bool exact_ = true;
  Unit unit_ = Unit::one;
  std::vector<std::vector<Rational>> gram_q_;
  std::vector<std::vector<double>> gram_d_;
};

/// All nonzero vectors of one norm.
struct NormShell {
  LengthValue value;  // m = sqrt(g^T Q g)
  std::vector<LatticeVector> vectors;
};

/// Every nonzero g with m(g) <= cutoff, grouped by norm in increasing order,
/// vectors of a shell in lexicographic order. Throws EnumerationLimit when
/// more than max_vectors vectors qualify.
std::vector<NormShell> enumerate_by_norm(const Lattice& lattice, const LengthValue& cutoff,
                                         std::size_t max_vectors = kDefaultMaxShellVectors);

/// Row-style Hermite normal form of the Z-span of `rows`: echelon form with
/// positive pivots and entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows);

/// Sublattice of Z^n kept in Hermite normal form.
class Sublattice {
 public:
  Sublattice(int dimension, const std::vector<LatticeVector>& generators);

  int dimension() const noexcept { return n_; }
  int rank() const noexcept { return static_cast<int>(hnf_.size()); }
  const std::vector<std::vector<Integer>>& hnf() const noexcept { return hnf_; }
  bool contains(const LatticeVector& g) const;
  /// Rank n and index 1.
  bool is_whole() const;
  /// det(H H^T) for the HNF rows H (1 for the zero sublattice).
  Integer gram_determinant() const;

 private:
  int n_;
  std::vector<std::vector<Integer>> hnf_;
};

Membership sublattice_membership(const LatticeVector& g, const std::vector<LatticeVector>& generators);

/// Lambda_delta: the span of the vectors with m < 2 delta.
Sublattice delta_sublattice(const Lattice& lattice, const LengthValue& delta);

/// l(g, delta) = min over h in Lambda_delta of m(g + h).
LengthValue translative_delta_length(const Lattice& lattice, const LatticeVector& g, const LengthValue& delta);

}  // namespace covspec
