#include "covspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "covspec/errors.hpp"

namespace covspec {

bool same_length(const LengthValue& a, const LengthValue& b, double tolerance) {
  require_same_unit(a, b);
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= tolerance;
}

Spectrum Spectrum::from_values(std::span<const LengthValue> values, Unit unit, double tolerance) {
  Spectrum s(unit);
  for (const auto& v : values) s.insert(v, 1, tolerance);
  return s;
}

void Spectrum::insert(const LengthValue& value, long multiplicity, double tolerance) {
  if (value.unit() != unit_)
    throw UnitMismatch("spectrum in unit '" + std::string(unit_name(unit_)) + "' cannot hold a value in '" +
                       std::string(unit_name(value.unit())) + "'");
  if (value.sign() <= 0) throw ArgumentError("spectrum values must be positive, got " + value.to_string());
  if (multiplicity < 1) throw ArgumentError("multiplicity must be at least 1");
  for (auto& e : entries_) {
    if (same_length(e.value, value, tolerance)) {
      e.multiplicity += multiplicity;
      return;
    }
  }
  auto pos = std::lower_bound(entries_.begin(), entries_.end(), value,
                              [](const SpectrumEntry& e, const LengthValue& v) { return e.value < v; });
  entries_.insert(pos, SpectrumEntry{value, multiplicity});
}

long Spectrum::total_multiplicity() const {
  long total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<LengthValue> Spectrum::values() const {
  std::vector<LengthValue> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.value);
  return out;
}

const LengthValue& Spectrum::min() const {
  if (entries_.empty()) throw ArgumentError("empty spectrum has no minimum");
  return entries_.front().value;
}

const LengthValue& Spectrum::max() const {
  if (entries_.empty()) throw ArgumentError("empty spectrum has no maximum");
  return entries_.back().value;
}

bool Spectrum::same_values(const Spectrum& other, double tolerance) const {
  if (unit_ != other.unit_) return false;
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!same_length(entries_[i].value, other.entries_[i].value, tolerance)) return false;
  return true;
}

bool Spectrum::same_entries(const Spectrum& other, double tolerance) const {
  if (!same_values(other, tolerance)) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].multiplicity != other.entries_[i].multiplicity) return false;
  return true;
}

AnchorSet::AnchorSet(std::vector<LengthValue> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw ArgumentError("anchor set needs both endpoints");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].sign() < 0) throw ArgumentError("anchor points must be nonnegative");
    if (i > 0 && !(points_[i - 1] < points_[i])) throw ArgumentError("anchor points must be strictly increasing");
  }
}

namespace {

std::vector<LengthValue> with_zero(const Spectrum& s) {
  std::vector<LengthValue> v{LengthValue::zero(s.unit())};
  for (const auto& e : s.entries()) v.push_back(e.value);
  return v;
}

// max over x in from of the distance to the nearest point of to.
LengthValue directed_distance(const std::vector<LengthValue>& from, const std::vector<LengthValue>& to) {
  LengthValue worst = LengthValue::zero(from.front().unit());
  for (const auto& x : from) {
    LengthValue best = abs_difference(x, to.front());
    for (std::size_t j = 1; j < to.size(); ++j) {
      LengthValue d = abs_difference(x, to[j]);
      if (d < best) best = d;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

}  // namespace

LengthValue hausdorff_distance_zero(const Spectrum& a, const Spectrum& b) {
  if (a.unit() != b.unit())
    throw UnitMismatch("Hausdorff distance between spectra in units '" + std::string(unit_name(a.unit())) +
                       "' and '" + std::string(unit_name(b.unit())) + "'");
  auto sa = with_zero(a);
  auto sb = with_zero(b);
  LengthValue ab = directed_distance(sa, sb);
  LengthValue ba = directed_distance(sb, sa);
  return ab < ba ? ba : ab;
}

std::vector<LengthValue> gap_list(const Spectrum& spectrum, const AnchorSet& anchors) {
  std::vector<LengthValue> points = anchors.points();
  for (const auto& e : spectrum.entries()) {
    if (e.value < anchors.lower() || e.value > anchors.upper()) continue;
    bool present = false;
    for (const auto& p : points) present = present || same_length(p, e.value);
    if (!present) points.push_back(e.value);
  }
  std::sort(points.begin(), points.end(), [](const LengthValue& x, const LengthValue& y) { return x < y; });
  std::vector<LengthValue> gaps;
  for (std::size_t i = 1; i < points.size(); ++i) gaps.push_back(abs_difference(points[i], points[i - 1]));
  std::sort(gaps.begin(), gaps.end(), [](const LengthValue& x, const LengthValue& y) { return x > y; });
  return gaps;
}

LengthValue gap_n(const std::vector<LengthValue>& gaps, std::size_t n, Unit unit) {
  if (n == 0) throw ArgumentError("gap index is 1-based");
  if (n > gaps.size()) return LengthValue::zero(unit);
  return gaps[n - 1];
}

long count_in_interval(const Spectrum& spectrum, const LengthValue& a, const LengthValue& b,
                       bool with_multiplicity) {
  if (a > b) throw ArgumentError("interval [" + a.to_string() + ", " + b.to_string() + "] is empty");
  if (a.sign() <= 0) throw ArgumentError("interval must start above zero");
  long count = 0;
  for (const auto& e : spectrum.entries())
    if (!(e.value < a) && !(e.value > b)) count += with_multiplicity ? e.multiplicity : 1;
  return count;
}

bool Clump::contains(const Spectrum& spectrum) const {
  for (const auto& e : spectrum.entries()) {
    if (e.value < radius) continue;
    bool covered = false;
    for (const auto& d : centers) {
      if (abs_difference(e.value, d) < radius) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

double Clump::measure() const {
  const double r = radius.to_double();
  std::vector<std::pair<double, double>> intervals{{0.0, r}};
  for (const auto& d : centers) intervals.emplace_back(std::max(0.0, d.to_double() - r), d.to_double() + r);
  std::sort(intervals.begin(), intervals.end());
  double total = 0.0;
  double lo = intervals.front().first;
  double hi = intervals.front().second;
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    if (intervals[i].first > hi) {
      total += hi - lo;
      lo = intervals[i].first;
      hi = intervals[i].second;
    } else {
      hi = std::max(hi, intervals[i].second);
    }
  }
  return total + (hi - lo);
}

std::vector<Clump> clump_cover(std::span<const Spectrum> family, const LengthValue& epsilon) {
  if (epsilon.sign() <= 0) throw ArgumentError("clump cover needs epsilon > 0");
  std::vector<Clump> clumps;
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_same_unit(epsilon, LengthValue::zero(family[i].unit()));
    bool placed = false;
    for (auto& c : clumps) {
      if (c.contains(family[i])) {
        c.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    // measure <= radius * (1 + 2 * #centers) < epsilon
    const long distinct = static_cast<long>(family[i].size());
    Clump c{epsilon.scaled(Rational(1, 2 * distinct + 3)), family[i].values(), {i}};
    clumps.push_back(std::move(c));
  }
  return clumps;
}

}  // namespace covspec
