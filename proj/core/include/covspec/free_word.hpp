#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covspec {

/// Signed generator index: +k is g_k, -k is g_k^-1 (k >= 1).
using Letter = int;

/// Reduced word in a free group. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  /// Freely reduces `letters`.
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(int k);
  /// Parses "g1 g2^-1 g1", "1 -2 1" or "1,-2,1"; "e" or "" is the identity.
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  /// Largest generator index that occurs.
  int max_generator() const noexcept;

  FreeWord inverse() const;
  FreeWord power(int k) const;
  FreeWord conjugated_by(const FreeWord& u) const;  // u w u^-1

  /// Removes matching first/last letters (x ... x^-1) repeatedly.
  FreeWord cyclically_reduced() const;
  /// Least rotation of the cyclic reduction or of its inverse; two words
  /// are conjugate exactly when their cyclic normal forms agree.
  FreeWord cyclic_normal_form() const;

  std::string to_string() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  /// Shortlex with the letter order g1 < g1^-1 < g2 < g2^-1 < ...
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

 private:
  std::vector<Letter> letters_;
};

/// Position of a letter in the canonical letter order.
inline int letter_rank(Letter l) noexcept { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

/// Substitutes image[k-1] for g_k and freely reduces.
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images);

}  // namespace covspec
