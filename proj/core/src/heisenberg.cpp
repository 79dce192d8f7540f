#include "covspec/heisenberg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool close_to(double x, double y) { return std::fabs(x - y) <= kFloatTolerance * std::max(1.0, std::fabs(y)); }

}  // namespace

void HeisenbergManifold::validate() const {
  if (n < 1) throw ArgumentError("Heisenberg dimension n must be positive");
  const auto size = static_cast<std::size_t>(n);
  if (r.size() != size || s.size() != size || a.size() != size)
    throw ArgumentError("r, s and a must each have n = " + std::to_string(n) + " entries");
  if (c <= 0) throw ArgumentError("c must be positive");
  for (std::size_t i = 0; i < size; ++i) {
    if (r[i] <= 0 || s[i] <= 0 || a[i] <= 0) throw ArgumentError("r, s and a must be positive");
    if (!is_integer(Rational(r[i] / c)) || !is_integer(Rational(s[i] / c)))
      throw ArgumentError("each r_i and s_i must be an integer multiple of c");
    if (i > 0 && a[i] < a[i - 1]) throw ArgumentError("a must be in ascending order");
  }
}

bool GammaElement::is_central() const {
  return std::all_of(x.begin(), x.end(), [](long long v) { return v == 0; }) &&
         std::all_of(y.begin(), y.end(), [](long long v) { return v == 0; });
}

bool GammaElement::is_identity() const { return is_central() && u == 0; }

double central_m_full(const HeisenbergManifold& m, long long z) {
  const double cz = std::fabs(to_double(m.c) * static_cast<double>(z));
  double best = cz;
  for (const auto& ai : m.a) {
    const double pa = M_PI * to_double(ai);
    for (long long j = 1; 2.0 * static_cast<double>(j) * pa < cz; ++j) {
      const double jp = static_cast<double>(j) * pa;
      best = std::min(best, std::sqrt(4.0 * jp * (cz - jp)));
    }
  }
  return best;
}

double central_m_reduced(const HeisenbergManifold& m, long long z) {
  const double cz = std::fabs(to_double(m.c) * static_cast<double>(z));
  double best = cz;
  for (const auto& ai : m.a) {
    const double pa = M_PI * to_double(ai);
    if (2.0 * pa < cz) best = std::min(best, std::sqrt(4.0 * pa * (cz - pa)));
  }
  return best;
}

LengthValue heisenberg_m_value(const HeisenbergManifold& m, const GammaElement& g) {
  m.validate();
  const auto size = static_cast<std::size_t>(m.n);
  if (g.x.size() != size || g.y.size() != size) throw ArgumentError("element has the wrong dimension");
  if (g.is_identity()) throw DomainError("m is not evaluated at the identity");
  if (!g.is_central()) {
    Rational sum = 0;
    for (std::size_t i = 0; i < size; ++i) {
      const Rational x(static_cast<long>(g.x[i]));
      const Rational y(static_cast<long>(g.y[i]));
      sum += m.a[i] * (m.r[i] * m.r[i] * x * x + m.s[i] * m.s[i] * y * y);
    }
    return LengthValue::sqrt_of(sum);
  }
  const double full = central_m_full(m, g.u);
  const double reduced = central_m_reduced(m, g.u);
  if (!close_to(full, reduced))
    throw Error("central length formulas disagree: " + std::to_string(full) + " vs " + std::to_string(reduced));
  return LengthValue::real(full);
}

HeisenbergRegime heisenberg_regime(const HeisenbergManifold& m) {
  m.validate();
  const double mc = central_m_full(m, 1);
  bool some_multiple = false;
  for (int i = 0; i < m.n; ++i) {
    if (!is_integer(Rational(m.c / (m.r[i] * m.s[i])))) continue;
    some_multiple = true;
    const double top = std::sqrt(to_double(m.a[i])) * std::max(to_double(m.r[i]), to_double(m.s[i]));
    if (mc >= top - kFloatTolerance) return HeisenbergRegime::central_absorbed;
  }
  if (some_multiple)
    throw UnhandledRegime("c is a multiple of some r_i s_i but m(0,0,c) = " + std::to_string(mc) +
                          " is below the matching generator lengths");
  for (int i = 0; i < m.n; ++i) {
    const double sa = std::sqrt(to_double(m.a[i]));
    if (close_to(mc, sa * to_double(m.r[i])) || close_to(mc, sa * to_double(m.s[i])))
      throw UnhandledRegime("m(0,0,c) coincides with a generator length");
  }
  return HeisenbergRegime::central_included;
}

Spectrum cov_spectrum_heisenberg(const HeisenbergManifold& m) {
  const HeisenbergRegime regime = heisenberg_regime(m);
  Spectrum out;
  for (int i = 0; i < m.n; ++i) {
    out.insert(LengthValue::sqrt_of(m.a[i] * m.r[i] * m.r[i] / 4));
    out.insert(LengthValue::sqrt_of(m.a[i] * m.s[i] * m.s[i] / 4));
  }
  if (regime == HeisenbergRegime::central_included) out.insert(LengthValue::real(central_m_full(m, 1) / 2));
  return out;
}

bool laplace_isospectral(const HeisenbergManifold& m1, const HeisenbergManifold& m2) {
  m1.validate();
  m2.validate();
  if (m1.n != m2.n) throw ArgumentError("isospectrality needs manifolds of the same dimension");
  if (!close_to(to_double(m1.c), to_double(m2.c))) return false;
  for (int i = 0; i < m1.n; ++i)
    if (!close_to(to_double(m1.a[i]), to_double(m2.a[i]))) return false;
  auto weights = [](const HeisenbergManifold& m) {
    std::vector<double> w;
    for (int i = 0; i < m.n; ++i) {
      w.push_back(to_double(m.a[i] * m.r[i] * m.r[i]));
      w.push_back(to_double(m.a[i] * m.s[i] * m.s[i]));
    }
    std::sort(w.begin(), w.end());
    return w;
  };
  const auto w1 = weights(m1);
  const auto w2 = weights(m2);
  for (std::size_t k = 0; k < w1.size(); ++k)
    if (!close_to(w1[k], w2[k])) return false;
  return true;
}

}  // namespace covspec
