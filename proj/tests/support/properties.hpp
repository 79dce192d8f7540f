#pragma once

// Randomised checks of the structural properties of the covering spectrum,
// shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Outcome {
  std::string name;
  int samples = 0;
  int failures = 0;
  std::string first_failure;
  int skipped = 0;  // instances whose membership questions stayed undecided
  bool ok(int min_samples) const { return failures == 0 && samples >= min_samples; }
};

/// Every 2 delta is the m-value of some deck transformation.
Outcome doubled_spectrum_in_marked_image(std::uint64_t seed, int samples);
/// f(g) <= m(g) / 2.
Outcome covering_map_below_half_m(std::uint64_t seed, int samples);
/// f(g1 g2) <= max(f(g1), f(g2)).
Outcome covering_map_ultrametric(std::uint64_t seed, int samples);
/// m(u g u^-1) = m(g) and m(g^-1) = m(g).
Outcome m_conjugation_inversion(std::uint64_t seed, int samples);
/// m(g) >= l(g, delta), and l(g, delta) >= 2 delta when g is not in Lambda_delta.
Outcome translative_length_bounds(std::uint64_t seed, int samples);
/// delta1 < delta2 implies relators(delta1) within relators(delta2).
Outcome relator_monotonicity(std::uint64_t seed, int samples);
/// delta-pair witnesses have m = 2 delta.
Outcome delta_pair_lengths(std::uint64_t seed, int samples);

std::vector<Outcome> all(std::uint64_t seed, int samples);

}  // namespace props
