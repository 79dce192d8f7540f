#include "covspec/families.hpp"

#include <cmath>

#include "covspec/errors.hpp"
#include "covspec/graph_backend.hpp"
#include "covspec/torus_backend.hpp"

namespace covspec {

std::string_view to_string(FamilyName name) noexcept {
  switch (name) {
    case FamilyName::torus_collapse:
      return "torus_collapse";
    case FamilyName::hawaii_trunc:
      return "hawaii_trunc";
    case FamilyName::todense:
      return "todense";
    case FamilyName::nounif:
      return "nounif";
    case FamilyName::rhombic_path:
      return "rhombic_path";
    case FamilyName::multiplicity_growth:
      return "multiplicity_growth";
  }
  return "";
}

FamilyName parse_family_name(std::string_view text) {
  for (auto name : {FamilyName::torus_collapse, FamilyName::hawaii_trunc, FamilyName::todense, FamilyName::nounif,
                    FamilyName::rhombic_path, FamilyName::multiplicity_growth})
    if (to_string(name) == text) return name;
  throw ArgumentError("unknown family '" + std::string(text) + "'");
}

FamilySpec FamilySpec::standard(FamilyName name) {
  FamilySpec s;
  s.name = name;
  switch (name) {
    case FamilyName::torus_collapse:
      s.first = 1, s.last = 10;
      break;
    case FamilyName::hawaii_trunc:
      s.first = 1, s.last = 16;
      break;
    case FamilyName::todense:
      s.first = 1, s.last = 6;
      break;
    case FamilyName::nounif:
      s.first = 2, s.last = 8;
      break;
    case FamilyName::rhombic_path:
      s.first = 0, s.last = 16;
      break;
    case FamilyName::multiplicity_growth:
      s.first = 1, s.last = 8;
      break;
  }
  return s;
}

void FamilySpec::validate() const {
  if (first > last) throw ArgumentError("family index range is empty");
  switch (name) {
    case FamilyName::nounif:
      if (first < 2) throw ArgumentError("nounif indices start at 2");
      break;
    case FamilyName::todense:
      if (first < 0 || last > 12) throw ArgumentError("todense indices must lie in 0..12");
      break;
    case FamilyName::rhombic_path:
      if (rhombic_steps < 1 || first < 0 || last > rhombic_steps)
        throw ArgumentError("rhombic_path indices must lie in 0.." + std::to_string(rhombic_steps));
      if (!(theta_start > 0 && theta_start < M_PI && theta_end > 0 && theta_end < M_PI))
        throw ArgumentError("rhombic angles must lie in (0, pi)");
      break;
    case FamilyName::hawaii_trunc:
      if (hawaii_target < last) throw ArgumentError("hawaii_trunc target must be at least the last index");
      [[fallthrough]];
    default:
      if (first < 1) throw ArgumentError("family indices start at 1");
  }
}

Unit FamilySpec::unit() const noexcept {
  switch (name) {
    case FamilyName::hawaii_trunc:
    case FamilyName::todense:
    case FamilyName::nounif:
      return Unit::pi;
    default:
      return Unit::one;
  }
}

double FamilySpec::theta(int index) const {
  return theta_start + (theta_end - theta_start) * static_cast<double>(index) / static_cast<double>(rhombic_steps);
}

namespace {

// Circles of the given radii; lengths in pi units are twice the radii.
MetricGraph circles(const std::vector<Rational>& radii) {
  std::vector<Rational> lengths;
  for (const auto& r : radii) lengths.push_back(2 * r);
  return MetricGraph::bouquet(lengths, Unit::pi);
}

Spectrum rhombic_formula(double theta) {
  Spectrum s;
  s.insert(LengthValue::rational(Rational(1, 2)), 2);
  const double short_diag = std::sqrt(2 - 2 * std::cos(theta));
  if (short_diag < 1) {
    s = Spectrum();
    s.insert(LengthValue::real(short_diag / 2));
    s.insert(LengthValue::rational(Rational(1, 2)));
  }
  return s;
}

}  // namespace

MetricGraph family_graph(const FamilySpec& spec, int index) {
  std::vector<Rational> radii;
  switch (spec.name) {
    case FamilyName::hawaii_trunc:
      for (int i = 1; i <= index; ++i) radii.emplace_back(1, i);
      return circles(radii);
    case FamilyName::todense: {
      const long n = 1L << index;
      for (long k = 1; k <= n; ++k) radii.push_back(fraction(k, n));
      return circles(radii);
    }
    case FamilyName::nounif: {
      const long i2 = static_cast<long>(index) * index;
      for (long k = 1; k < index; ++k) radii.push_back(fraction(k, i2));
      radii.emplace_back(1, index);
      radii.emplace_back(1);
      return circles(radii);
    }
    case FamilyName::multiplicity_growth: {
      std::vector<Rational> lengths(static_cast<std::size_t>(index), fraction(2, index));
      return MetricGraph::bouquet(lengths);
    }
    default:
      throw ArgumentError(std::string(to_string(spec.name)) + " is not a graph family");
  }
}

std::vector<FamilyMember> family_spectra(const FamilySpec& spec, const CoverBounds& bounds) {
  spec.validate();
  std::vector<FamilyMember> out;
  for (int k = spec.first; k <= spec.last; ++k) {
    FamilyMember m;
    m.index = k;
    switch (spec.name) {
      case FamilyName::torus_collapse: {
        TorusBackend b(Lattice::diagonal({fraction(1, k), Rational(1)}));
        auto r = compute_cov_spectrum(b, b.default_cutoff());
        m.spectrum = r.spectrum;
        m.label = "1/" + std::to_string(k) + " x 1 torus";
        break;
      }
      case FamilyName::rhombic_path: {
        const double theta = spec.theta(k);
        TorusBackend b(Lattice::rhombic(theta));
        auto r = compute_cov_spectrum(b, b.default_cutoff());
        m.spectrum = r.spectrum;
        m.label = "theta=" + LengthValue::real(theta).to_string();
        break;
      }
      default: {
        BouquetBackend b(family_graph(spec, k), bounds.max_cosets, bounds.max_classes);
        auto r = compute_cov_spectrum(b, b.default_cutoff());
        m.spectrum = r.spectrum;
        m.label = std::string(to_string(spec.name)) + " " + std::to_string(k);
        break;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<Spectrum> analytic_limit(const FamilySpec& spec) {
  spec.validate();
  switch (spec.name) {
    case FamilyName::torus_collapse: {
      Spectrum s;
      s.insert(LengthValue::rational(Rational(1, 2)));
      return s;
    }
    case FamilyName::hawaii_trunc: {
      Spectrum s(Unit::pi);
      for (int i = 1; i <= spec.hawaii_target; ++i) s.insert(LengthValue::rational(fraction(1, i), Unit::pi));
      return s;
    }
    case FamilyName::nounif: {
      Spectrum s(Unit::pi);
      s.insert(LengthValue::rational(1, Unit::pi));
      return s;
    }
    case FamilyName::rhombic_path:
      return rhombic_formula(spec.theta_end);
    case FamilyName::multiplicity_growth:
      return Spectrum();
    case FamilyName::todense:
      return std::nullopt;
  }
  return std::nullopt;
}

ConvergenceReport convergence_report(const std::vector<FamilyMember>& members, const Spectrum& limit) {
  ConvergenceReport report;
  for (const auto& m : members) {
    LengthValue d = hausdorff_distance_zero(m.spectrum, limit);
    if (!report.rows.empty() && d > report.rows.back().distance) report.monotone = false;
    report.rows.push_back({m.index, std::move(d)});
  }
  return report;
}

std::vector<GapRow> gap_report(const std::vector<FamilyMember>& members, const AnchorSet& anchors) {
  std::vector<GapRow> rows;
  const std::size_t width = anchors.points().size() - 1;
  for (const auto& m : members) {
    const auto gaps = gap_list(m.spectrum, anchors);
    GapRow row{m.index, {}};
    for (std::size_t n = 1; n <= width; ++n) row.gaps.push_back(gap_n(gaps, n, anchors.lower().unit()));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<NearZeroVerdict> near_zero_gap_check(const std::vector<FamilyMember>& members, const Spectrum& limit) {
  if (limit.empty()) throw ArgumentError("the limit spectrum must be nonempty");
  const LengthValue lambda = limit.min();
  const LengthValue half = lambda.half();
  std::vector<NearZeroVerdict> out;
  for (const auto& m : members) {
    NearZeroVerdict v{m.index, LengthValue::zero(limit.unit()), true};
    for (const auto& e : m.spectrum.entries())
      if (!(e.value > half)) v.epsilon = e.value;
    for (const auto& e : m.spectrum.entries())
      if (e.value > v.epsilon && e.value < lambda && !same_length(e.value, lambda)) v.holds = false;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace covspec
