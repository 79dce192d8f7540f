#pragma once

#include <vector>

#include "covspec/length.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

/// Heisenberg manifold H_n(Gamma, g) for the lattice Gamma_{r,s,c} and the
/// left-invariant metric that is diagonal with entries a_1..a_n on both the
/// x and y blocks and 1 on the centre.
struct HeisenbergManifold {
  int n = 0;
  std::vector<Rational> r;
  std::vector<Rational> s;
  Rational c;
  std::vector<Rational> a;

  /// Throws ArgumentError unless every r_i / c and s_i / c is a positive
  /// integer and 0 < a_1 <= ... <= a_n.
  void validate() const;
};

/// The element (r_1 x_1, ..., s_1 y_1, ..., c u) of Gamma.
struct GammaElement {
  std::vector<long long> x;
  std::vector<long long> y;
  long long u = 0;

  bool is_central() const;
  bool is_identity() const;
};

/// Minimum marked length of g. Non-central elements get the exact value
/// sqrt(sum a_i (r_i^2 x_i^2 + s_i^2 y_i^2)); central elements a float
/// computed by both the minimum over all j and the j = 1 reduction, which
/// are checked to agree.
LengthValue heisenberg_m_value(const HeisenbergManifold& m, const GammaElement& g);

/// m(0, 0, c z) as min{|cz|, (4 j pi a_i (|cz| - j pi a_i))^(1/2) : 2 j pi a_i < |cz|}.
double central_m_full(const HeisenbergManifold& m, long long z);
/// The same minimum restricted to j = 1.
double central_m_reduced(const HeisenbergManifold& m, long long z);

enum class HeisenbergRegime {
  /// c is no integer multiple of any r_i s_i and m(0,0,c) avoids the
  /// generator lengths: the centre contributes m(0,0,c) / 2.
  central_included,
  /// c = k r_i s_i with m(0,0,c) >= max(sqrt(a_i) r_i, sqrt(a_i) s_i) for
  /// some i: the centre contributes nothing new.
  central_absorbed,
};

/// Throws UnhandledRegime outside the two analysed regimes.
HeisenbergRegime heisenberg_regime(const HeisenbergManifold& m);

/// Covering spectrum by the case analysis. Multiplicities count coinciding
/// values, not short-basis sizes.
Spectrum cov_spectrum_heisenberg(const HeisenbergManifold& m);

/// Gordon's criterion: a = a', c = c' and {a_i r_i^2} u {a_i s_i^2} agree as
/// multisets (compared as doubles at 1e-9).
bool laplace_isospectral(const HeisenbergManifold& m1, const HeisenbergManifold& m2);

}  // namespace covspec
