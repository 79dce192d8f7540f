#include "covspec/torus_backend.hpp"

#include <algorithm>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

bool leading_positive(const LatticeVector& g) {
  for (long long x : g)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

bool TorusBackend::is_identity(const Element& g) const {
  return std::all_of(g.begin(), g.end(), [](long long x) { return x == 0; });
}

TorusBackend::Element TorusBackend::compose(const Element& a, const Element& b) const {
  if (a.size() != b.size()) throw ArgumentError("vector dimension mismatch");
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

TorusBackend::Element TorusBackend::invert(const Element& g) const {
  Element c(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) c[i] = -g[i];
  return c;
}

std::vector<ValueClasses<TorusBackend::Element>> TorusBackend::enumerate_values(const LengthValue& cutoff) const {
  std::vector<ValueClasses<Element>> out;
  for (auto& shell : enumerate_by_norm(lattice_, cutoff)) {
    ValueClasses<Element> vc{shell.value, {}};
    for (auto& v : shell.vectors)
      if (leading_positive(v)) vc.classes.push_back(std::move(v));
    out.push_back(std::move(vc));
  }
  return out;
}

}  // namespace covspec
