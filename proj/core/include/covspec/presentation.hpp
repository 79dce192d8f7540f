#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covspec/decision.hpp"
#include "covspec/todd_coxeter.hpp"

namespace covspec {

/// Plain-text presentation file:
///
///     generators 3
///     g1 g2 g1^-1 g2^-1
///     g3^2
///
/// The first non-comment line declares the generator count, every further
/// line is one relator. Lines starting with '#' are ignored.
std::string format_presentation(const Presentation& p);
Presentation parse_presentation(std::string_view text);

/// Result of eliminating generators that occur exactly once in a relator.
struct TietzeReduction {
  Presentation remaining;        // on the surviving generators, renumbered 1..k
  std::vector<FreeWord> images;  // image of each original generator
};

TietzeReduction tietze_reduce(const Presentation& p, std::size_t max_word_length = 100'000);

/// The quotient F / <<relators>> of a free group, decided exactly when it is
/// free (all relators eliminated by Tietze moves) or finite (coset
/// enumeration closes); unknown otherwise.
class PresentedQuotient {
 public:
  enum class Kind { free, finite, unknown };

  PresentedQuotient(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

  Kind kind() const noexcept { return kind_; }
  int generators() const noexcept { return generators_; }
  /// Rank of the free quotient (Kind::free only).
  int free_rank() const noexcept { return reduction_.remaining.generators; }
  /// Order of the finite quotient (Kind::finite only).
  std::size_t order() const;

  /// Whether w lies in the normal closure of the relators.
  Membership contains(const FreeWord& w) const;
  Tri is_trivial() const;
  std::optional<QuotientInvariant> invariant() const;

  /// Regular permutation action of each original generator (finite only).
  std::vector<std::vector<int>> generator_action() const;
  const std::optional<CosetTable>& table() const noexcept { return table_; }

 private:
  int generators_;
  Kind kind_;
  TietzeReduction reduction_;
  std::optional<CosetTable> table_;
};

}  // namespace covspec
