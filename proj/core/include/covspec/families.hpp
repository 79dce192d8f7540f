#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covspec/delta_cover.hpp"
#include "covspec/metric_graph.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

/// Built-in families of spaces.
///
///   torus_collapse       flat tori with circumferences 1/j and 1
///   hawaii_trunc         bouquet of circles of radii 1, 1/2, ..., 1/k (pi units)
///   todense              bouquet of 2^j circles of radii k / 2^j (pi units)
///   nounif               bouquet of circles of radii 1/i^2, ..., (i-1)/i^2, 1/i, 1 (pi units)
///   rhombic_path         rhombic tori with angles sampled from theta_start to theta_end
///   multiplicity_growth  bouquet of j circles of length 2/j
enum class FamilyName { torus_collapse, hawaii_trunc, todense, nounif, rhombic_path, multiplicity_growth };

std::string_view to_string(FamilyName name) noexcept;
FamilyName parse_family_name(std::string_view text);

struct FamilySpec {
  FamilyName name = FamilyName::torus_collapse;
  int first = 1;
  int last = 1;
  double theta_start = 1.5707963267948966;  // rhombic_path only
  double theta_end = 0.7853981633974483;
  int rhombic_steps = 16;  // index k samples theta_start + k/steps (theta_end - theta_start)
  /// Truncation level of the hawaii_trunc comparison target.
  int hawaii_target = 64;

  /// A spec with the family's usual index range.
  static FamilySpec standard(FamilyName name);
  void validate() const;
  Unit unit() const noexcept;
  /// Rhombic angle at index k (rhombic_path only).
  double theta(int index) const;
};

/// The graph of a bouquet family at one index.
MetricGraph family_graph(const FamilySpec& spec, int index);

struct FamilyMember {
  int index = 0;
  std::string label;
  Spectrum spectrum;
};

std::vector<FamilyMember> family_spectra(const FamilySpec& spec, const CoverBounds& bounds = {});

/// Known limit spectrum of the family, if there is one.
std::optional<Spectrum> analytic_limit(const FamilySpec& spec);

struct ConvergenceRow {
  int index = 0;
  LengthValue distance;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  bool monotone = true;  // non-increasing distances
};

ConvergenceReport convergence_report(const std::vector<FamilyMember>& members, const Spectrum& limit);

struct GapRow {
  int index = 0;
  std::vector<LengthValue> gaps;  // gap_1 .. gap_{#anchors - 1}
};

std::vector<GapRow> gap_report(const std::vector<FamilyMember>& members, const AnchorSet& anchors);

struct NearZeroVerdict {
  int index = 0;
  LengthValue epsilon;  // largest spectrum value <= lambda / 2, zero if none
  bool holds = false;   // spectrum misses (epsilon, lambda)
};

/// lambda is the least value of the limit spectrum.
std::vector<NearZeroVerdict> near_zero_gap_check(const std::vector<FamilyMember>& members, const Spectrum& limit);

}  // namespace covspec
