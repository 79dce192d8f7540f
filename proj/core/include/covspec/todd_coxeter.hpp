#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "covspec/free_word.hpp"

namespace covspec {

/// Finitely presented group <g1..gn | relators>.
struct Presentation {
  int generators = 0;
  std::vector<FreeWord> relators;
};

/// Complete coset table: row c, column letter_rank(l) gives c . l.
class CosetTable {
 public:
  CosetTable(int generators, std::vector<std::vector<int>> rows);

  int generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return rows_.size(); }
  int act(int coset, Letter l) const { return rows_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(letter_rank(l))]; }
  int act(int coset, const FreeWord& w) const;
  /// Image of every coset under generator k (k >= 1).
  std::vector<int> permutation(int generator) const;

 private:
  int generators_;
  std::vector<std::vector<int>> rows_;
};

inline constexpr std::size_t kDefaultMaxCosets = 50'000;

/// Hasselgrove-Leech-Trotter coset enumeration of the subgroup generated by
/// `subgroup` in the presented group. Returns the standardised table when
/// the enumeration closes within `max_cosets` live-or-dead cosets, nullopt
/// otherwise.
std::optional<CosetTable> enumerate_cosets(const Presentation& presentation, std::span<const FreeWord> subgroup,
                                           std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace covspec
