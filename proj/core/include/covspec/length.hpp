#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace covspec {

using Rational = mpq_class;
using Integer = mpz_class;

/// Symbolic scale attached to a length. Circle families are stored as
/// coefficients of pi so their spectra stay rational.
enum class Unit { one, pi };

std::string_view unit_name(Unit unit) noexcept;
Unit parse_unit(std::string_view text);

/// Parses "7", "-3/4", "1.25" or "2.5e-1" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
/// Nearest double (mpq_get_d truncates).
double to_double(const Rational& value);
/// num/den in lowest terms (mpq_class(num, den) does not reduce).
Rational fraction(long num, long den);

enum class LengthKind { exact_rational, exact_quadratic, floating };

/// A length that is kept exact whenever the inputs are exact.
///
/// exact_quadratic stores a nonnegative radicand q and means sqrt(q); a
/// radicand that is a perfect rational square is normalised to
/// exact_rational on construction, so sqrt(9/4) and 3/2 have the same
/// representation. Two exact values compare exactly (by squaring with sign
/// analysis). A comparison that involves a floating value coerces the other
/// side to double.
class LengthValue {
 public:
  LengthValue();

  static LengthValue rational(Rational value, Unit unit = Unit::one);
  static LengthValue sqrt_of(Rational radicand, Unit unit = Unit::one);
  static LengthValue real(double value, Unit unit = Unit::one);
  static LengthValue zero(Unit unit = Unit::one) { return rational(0, unit); }

  LengthKind kind() const noexcept { return kind_; }
  Unit unit() const noexcept { return unit_; }
  bool is_exact() const noexcept { return kind_ != LengthKind::floating; }
  bool is_zero() const;
  int sign() const;

  /// exact_rational only.
  const Rational& rational_value() const;
  /// exact_quadratic only.
  const Rational& radicand() const;
  /// The exact square of a nonnegative exact value.
  std::optional<Rational> exact_square() const;

  double to_double() const;

  LengthValue half() const { return scaled(Rational(1, 2)); }
  LengthValue twice() const { return scaled(Rational(2)); }
  LengthValue scaled(const Rational& factor) const;
  LengthValue with_unit(Unit unit) const;

  std::string to_string() const;

  /// Throws UnitMismatch when the units differ.
  friend std::partial_ordering operator<=>(const LengthValue& a, const LengthValue& b);
  friend bool operator==(const LengthValue& a, const LengthValue& b);

 private:
  LengthKind kind_;
  Unit unit_;
  Rational exact_;
  double approx_;
};

/// |a - b|; exact when both sides are exact rationals or equal.
LengthValue abs_difference(const LengthValue& a, const LengthValue& b);
/// a + b; exact when both sides are exact rationals.
LengthValue add(const LengthValue& a, const LengthValue& b);

void require_same_unit(const LengthValue& a, const LengthValue& b);

}  // namespace covspec
