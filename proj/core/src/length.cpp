#include "covspec/length.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "covspec/errors.hpp"

namespace covspec {

std::string_view unit_name(Unit unit) noexcept {
  return unit == Unit::pi ? "pi" : "1";
}

Unit parse_unit(std::string_view text) {
  if (text == "1" || text.empty()) return Unit::one;
  if (text == "pi" || text == "π-units" || text == "pi-units") return Unit::pi;
  throw ArgumentError("unknown unit '" + std::string(text) + "'");
}

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// Decimal with optional exponent, parsed exactly.
Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string exp_text(s.substr(e + 1));
    if (exp_text.empty()) throw ArgumentError("malformed number '" + std::string(text) + "'");
    std::size_t used = 0;
    try {
      exponent = std::stol(exp_text, &used);
    } catch (const std::exception&) {
      throw ArgumentError("malformed number '" + std::string(text) + "'");
    }
    if (used != exp_text.size()) throw ArgumentError("malformed number '" + std::string(text) + "'");
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !is_digits(int_part)) ||
      (!frac_part.empty() && !is_digits(frac_part)))
    throw ArgumentError("malformed number '" + std::string(text) + "'");
  std::string digits = std::string(int_part) + std::string(frac_part);
  Integer numerator(digits.empty() ? std::string("0") : digits, 10);
  long scale = static_cast<long>(frac_part.size()) - exponent;
  Rational r;
  if (scale >= 0)
    r = Rational(numerator, pow10(static_cast<unsigned long>(scale)));
  else
    r = Rational(numerator * pow10(static_cast<unsigned long>(-scale)));
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw ArgumentError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    Rational r = num / den;
    r.canonicalize();
    return r;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational fraction(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double to_double(const Rational& value) {
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  // Both exactly representable: one correctly rounded division.
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53)
    return num.get_d() / den.get_d();
  return value.get_d();
}

LengthValue::LengthValue() : kind_(LengthKind::exact_rational), unit_(Unit::one), exact_(0), approx_(0.0) {}

LengthValue LengthValue::rational(Rational value, Unit unit) {
  LengthValue v;
  value.canonicalize();
  v.kind_ = LengthKind::exact_rational;
  v.unit_ = unit;
  v.approx_ = covspec::to_double(value);
  v.exact_ = std::move(value);
  return v;
}

LengthValue LengthValue::sqrt_of(Rational radicand, Unit unit) {
  radicand.canonicalize();
  if (radicand < 0) throw DomainError("square root of a negative radicand " + radicand.get_str());
  const Integer& num = radicand.get_num();
  const Integer& den = radicand.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return rational(Rational(rn, rd), unit);
  }
  LengthValue v;
  v.kind_ = LengthKind::exact_quadratic;
  v.unit_ = unit;
  v.approx_ = std::sqrt(covspec::to_double(radicand));
  v.exact_ = std::move(radicand);
  return v;
}

LengthValue LengthValue::real(double value, Unit unit) {
  if (!std::isfinite(value)) throw DomainError("non-finite length");
  LengthValue v;
  v.kind_ = LengthKind::floating;
  v.unit_ = unit;
  v.approx_ = value;
  v.exact_ = 0;
  return v;
}

bool LengthValue::is_zero() const {
  return kind_ == LengthKind::floating ? approx_ == 0.0 : exact_ == 0;
}

int LengthValue::sign() const {
  switch (kind_) {
    case LengthKind::exact_rational:
      return sgn(exact_);
    case LengthKind::exact_quadratic:
      return exact_ == 0 ? 0 : 1;
    case LengthKind::floating:
      return approx_ > 0 ? 1 : (approx_ < 0 ? -1 : 0);
  }
  return 0;
}

const Rational& LengthValue::rational_value() const {
  if (kind_ != LengthKind::exact_rational) throw ArgumentError("length " + to_string() + " is not rational");
  return exact_;
}

const Rational& LengthValue::radicand() const {
  if (kind_ != LengthKind::exact_quadratic) throw ArgumentError("length " + to_string() + " is not a square root");
  return exact_;
}

std::optional<Rational> LengthValue::exact_square() const {
  switch (kind_) {
    case LengthKind::exact_rational:
      if (exact_ < 0) return std::nullopt;
      return Rational(exact_ * exact_);
    case LengthKind::exact_quadratic:
      return exact_;
    case LengthKind::floating:
      return std::nullopt;
  }
  return std::nullopt;
}

double LengthValue::to_double() const { return approx_; }

LengthValue LengthValue::scaled(const Rational& factor) const {
  switch (kind_) {
    case LengthKind::exact_rational:
      return rational(exact_ * factor, unit_);
    case LengthKind::exact_quadratic:
      if (factor < 0) throw DomainError("negative scaling of a square-root length");
      return sqrt_of(exact_ * factor * factor, unit_);
    case LengthKind::floating:
      return real(approx_ * covspec::to_double(factor), unit_);
  }
  return *this;
}

LengthValue LengthValue::with_unit(Unit unit) const {
  LengthValue v = *this;
  v.unit_ = unit;
  return v;
}

std::string LengthValue::to_string() const {
  switch (kind_) {
    case LengthKind::exact_rational:
      return exact_.get_str();
    case LengthKind::exact_quadratic:
      return "sqrt(" + exact_.get_str() + ")";
    case LengthKind::floating: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", approx_);
      return buf;
    }
  }
  return {};
}

void require_same_unit(const LengthValue& a, const LengthValue& b) {
  if (a.unit() != b.unit())
    throw UnitMismatch("cannot combine lengths in units '" + std::string(unit_name(a.unit())) + "' and '" +
                       std::string(unit_name(b.unit())) + "'");
}

namespace {

std::partial_ordering from_int(int c) {
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

}  // namespace

std::partial_ordering operator<=>(const LengthValue& a, const LengthValue& b) {
  require_same_unit(a, b);
  if (!a.is_exact() || !b.is_exact()) return a.approx_ <=> b.approx_;
  if (a.kind_ == b.kind_) return from_int(cmp(a.exact_, b.exact_));
  // One rational side r, one square root sqrt(q) >= 0.
  const bool a_is_rational = a.kind_ == LengthKind::exact_rational;
  const Rational& r = a_is_rational ? a.exact_ : b.exact_;
  const Rational& q = a_is_rational ? b.exact_ : a.exact_;
  int c;  // sign of (r - sqrt(q))
  if (r < 0)
    c = -1;
  else
    c = cmp(Rational(r * r), q);
  return from_int(a_is_rational ? c : -c);
}

bool operator==(const LengthValue& a, const LengthValue& b) { return (a <=> b) == 0; }

LengthValue abs_difference(const LengthValue& a, const LengthValue& b) {
  require_same_unit(a, b);
  if (a.kind() == LengthKind::exact_rational && b.kind() == LengthKind::exact_rational)
    return LengthValue::rational(abs(a.rational_value() - b.rational_value()), a.unit());
  if (a.is_exact() && b.is_exact() && a == b) return LengthValue::zero(a.unit());
  if (a.is_exact() && b.is_zero()) return a;
  if (b.is_exact() && a.is_zero()) return b;
  return LengthValue::real(std::fabs(a.to_double() - b.to_double()), a.unit());
}

LengthValue add(const LengthValue& a, const LengthValue& b) {
  require_same_unit(a, b);
  if (a.kind() == LengthKind::exact_rational && b.kind() == LengthKind::exact_rational)
    return LengthValue::rational(a.rational_value() + b.rational_value(), a.unit());
  if (a.is_exact() && b.is_zero()) return a;
  if (b.is_exact() && a.is_zero()) return b;
  return LengthValue::real(a.to_double() + b.to_double(), a.unit());
}

}  // namespace covspec
