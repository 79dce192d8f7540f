#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covspec/length.hpp"

namespace covspec {

/// Tolerance used wherever a floating length is compared for equality.
inline constexpr double kFloatTolerance = 1e-9;

/// Equality for spectrum values: exact when both sides are exact, within
/// `tolerance` otherwise.
bool same_length(const LengthValue& a, const LengthValue& b, double tolerance = kFloatTolerance);

struct SpectrumEntry {
  LengthValue value;
  long multiplicity = 1;
};

/// Finite multiset of positive lengths, kept sorted with merged duplicates.
class Spectrum {
 public:
  explicit Spectrum(Unit unit = Unit::one) : unit_(unit) {}

  static Spectrum from_values(std::span<const LengthValue> values, Unit unit,
                              double tolerance = kFloatTolerance);

  /// Adds `multiplicity` copies of a strictly positive value.
  void insert(const LengthValue& value, long multiplicity = 1, double tolerance = kFloatTolerance);

  const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  Unit unit() const noexcept { return unit_; }
  long total_multiplicity() const;
  std::vector<LengthValue> values() const;

  const LengthValue& min() const;
  const LengthValue& max() const;

  /// Value sets agree (multiplicities ignored).
  bool same_values(const Spectrum& other, double tolerance = kFloatTolerance) const;
  /// Value sets and multiplicities agree.
  bool same_entries(const Spectrum& other, double tolerance = kFloatTolerance) const;

 private:
  Unit unit_;
  std::vector<SpectrumEntry> entries_;
};

/// Finite increasing set of anchor points containing both endpoints.
class AnchorSet {
 public:
  explicit AnchorSet(std::vector<LengthValue> points);

  const std::vector<LengthValue>& points() const noexcept { return points_; }
  const LengthValue& lower() const { return points_.front(); }
  const LengthValue& upper() const { return points_.back(); }

 private:
  std::vector<LengthValue> points_;
};

/// Hausdorff distance between A ∪ {0} and B ∪ {0} on the real line.
/// Multiplicities are ignored.
LengthValue hausdorff_distance_zero(const Spectrum& a, const Spectrum& b);

/// Consecutive differences of (A ∩ [L1, L2]) ∪ S, in decreasing order.
std::vector<LengthValue> gap_list(const Spectrum& spectrum, const AnchorSet& anchors);

/// The N-th largest gap (1-based); zero when fewer than N gaps exist.
LengthValue gap_n(const std::vector<LengthValue>& gaps, std::size_t n, Unit unit);

/// Number of entries with a <= value <= b, optionally weighted by multiplicity.
long count_in_interval(const Spectrum& spectrum, const LengthValue& a, const LengthValue& b,
                       bool with_multiplicity);

/// [0, radius) ∪ ⋃_d (d - radius, d + radius) together with the family
/// members it covers.
struct Clump {
  LengthValue radius;
  std::vector<LengthValue> centers;
  std::vector<std::size_t> members;

  bool contains(const Spectrum& spectrum) const;
  /// Lebesgue measure of the union of intervals.
  double measure() const;
};

/// Covers a finite family by interval-union sets of measure < epsilon.
std::vector<Clump> clump_cover(std::span<const Spectrum> family, const LengthValue& epsilon);

}  // namespace covspec
