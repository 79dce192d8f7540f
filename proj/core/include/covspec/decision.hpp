#pragma once

#include <string_view>

#include "covspec/length.hpp"

namespace covspec {

/// Answer of a subgroup-membership query.
enum class Membership { in, out, unknown };

/// Three-valued answer for questions a bounded procedure may not settle.
enum class Tri { yes, no, unknown };

std::string_view to_string(Membership m) noexcept;
std::string_view to_string(Tri t) noexcept;

/// Isomorphism-type summary of a quotient G / N. For nested normal
/// subgroups N1 <= N2 of the same group the two quotients agree exactly
/// when N1 = N2: finite quotients by order, free quotients by rank (free
/// groups of finite rank are Hopfian), lattices by rank and covolume.
struct QuotientInvariant {
  enum class Kind { finite, free, lattice };
  Kind kind = Kind::finite;
  Integer primary;    // order, free rank, or sublattice rank
  Integer secondary;  // determinant of the sublattice Gram matrix

  static QuotientInvariant finite(Integer order) { return {Kind::finite, std::move(order), 0}; }
  static QuotientInvariant free(Integer rank) {
    if (rank == 0) return finite(1);
    return {Kind::free, std::move(rank), 0};
  }
  static QuotientInvariant lattice(Integer rank, Integer gram_det) {
    return {Kind::lattice, std::move(rank), std::move(gram_det)};
  }

  friend bool operator==(const QuotientInvariant&, const QuotientInvariant&) = default;
};

}  // namespace covspec
