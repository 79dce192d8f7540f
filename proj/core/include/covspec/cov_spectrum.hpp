#pragma once

// Covering spectrum of a space presented through its minimum marked length
// map m on the deck group of the universal cover.
//
// The chain {e} = G_0 < G_1 < ... < G_k is built by value: G_{j+1} is
// generated by G_j and every conjugacy class whose m-value equals the least
// m-value v not yet swallowed by G_j, and delta_{j+1} = v / 2. Backends
// supply the m-values with finitely many class representatives per value and
// decide membership in the normal closure of a finite set of classes.

#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "covspec/decision.hpp"
#include "covspec/errors.hpp"
#include "covspec/length.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

template <class E>
struct ValueClasses {
  LengthValue value;
  std::vector<E> classes;
};

template <class B>
concept MarkedGroupBackend =
    requires(const B& b, const typename B::Element& g, const std::vector<typename B::Element>& gens,
             const LengthValue& cutoff) {
      { b.unit() } -> std::same_as<Unit>;
      { b.identity() } -> std::convertible_to<typename B::Element>;
      { b.is_identity(g) } -> std::same_as<bool>;
      { b.compose(g, g) } -> std::convertible_to<typename B::Element>;
      { b.invert(g) } -> std::convertible_to<typename B::Element>;
      { b.m_value(g) } -> std::same_as<LengthValue>;
      { b.enumerate_values(cutoff) } -> std::same_as<std::vector<ValueClasses<typename B::Element>>>;
      { b.close(gens) } -> std::same_as<typename B::Closure>;
      { b.describe(g) } -> std::same_as<nlohmann::json>;
    } &&
    requires(const typename B::Closure& closure, const typename B::Element& g) {
      { closure.contains(g) } -> std::same_as<Membership>;
      { closure.is_whole() } -> std::same_as<Tri>;
      { closure.invariant() } -> std::same_as<std::optional<QuotientInvariant>>;
    };

/// Backends that can jump straight to the next value carrying a class
/// outside a given closure, instead of listing every class below a cutoff.
template <class B>
concept ShellAcceleratedBackend =
    MarkedGroupBackend<B> && requires(const B& b, const typename B::Closure& closure, const LengthValue& cutoff) {
      { b.next_out_shell(closure, cutoff) } -> std::same_as<std::optional<ValueClasses<typename B::Element>>>;
    };

template <class E>
struct ChainStep {
  LengthValue delta;
  std::vector<E> value_classes;  // representatives with m = 2 delta
  std::vector<E> short_basis;
  long multiplicity = 0;
};

template <class E>
struct SubgroupChain {
  std::vector<ChainStep<E>> steps;
  bool complete = false;
};

template <class E>
struct CoveringSpectrumResult {
  Spectrum spectrum;
  SubgroupChain<E> chain;
};

/// A membership query could not be settled at a point where the spectrum
/// depends on it.
class IndeterminateSpectrumError : public Error {
 public:
  using Error::Error;
};

template <class E>
class IndeterminateSpectrum : public IndeterminateSpectrumError {
 public:
  IndeterminateSpectrum(const std::string& what, SubgroupChain<E> partial)
      : IndeterminateSpectrumError(what), partial_(std::move(partial)) {}
  const SubgroupChain<E>& partial_chain() const noexcept { return partial_; }

 private:
  SubgroupChain<E> partial_;
};

struct CovSpecOptions {
  bool fill_short_basis = true;
  std::size_t max_subset_representatives = 16;
};

namespace detail {

template <class E>
Spectrum spectrum_of(const SubgroupChain<E>& chain, Unit unit) {
  Spectrum s(unit);
  for (const auto& step : chain.steps) s.insert(step.delta, std::max<long>(step.multiplicity, 1));
  return s;
}

template <class E>
std::vector<E> joined(std::vector<E> a, const std::vector<E>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Calls f(subset) on every k-subset of {0..n-1} in lexicographic order until
// f returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Fills short_basis and multiplicity of every step: the fewest
/// representatives of S_j that generate G_j together with G_{j-1}.
template <MarkedGroupBackend B>
void short_basis_and_multiplicity(const B& backend, SubgroupChain<typename B::Element>& chain,
                                  std::size_t max_subset_representatives = 16) {
  using E = typename B::Element;
  std::vector<E> previous;
  for (auto& step : chain.steps) {
    const auto& S = step.value_classes;
    if (S.size() > max_subset_representatives)
      throw EnumerationLimit("short-basis search at delta " + step.delta.to_string() + " has " +
                             std::to_string(S.size()) + " representatives (limit " +
                             std::to_string(max_subset_representatives) + "); multiplicity is at most " +
                             std::to_string(S.size()));
    bool found = false;
    for (std::size_t k = 1; k <= S.size() && !found; ++k) {
      found = detail::for_each_subset(S.size(), k, [&](const std::vector<std::size_t>& pick) {
        std::vector<E> gens = previous;
        for (auto i : pick) gens.push_back(S[i]);
        auto closure = backend.close(gens);
        for (const auto& s : S) {
          Membership m = closure.contains(s);
          if (m == Membership::unknown)
            throw IndeterminateSpectrum<E>("short-basis membership undecided at delta " + step.delta.to_string(),
                                           chain);
          if (m == Membership::out) return false;
        }
        step.short_basis.clear();
        for (auto i : pick) step.short_basis.push_back(S[i]);
        step.multiplicity = static_cast<long>(k);
        return true;
      });
    }
    if (!found) throw Error("value classes at delta " + step.delta.to_string() + " do not generate their own step");
    previous.insert(previous.end(), S.begin(), S.end());
  }
}

/// Covering spectrum up to `cutoff` (a bound on delta, so m-values up to
/// 2 * cutoff are consulted). The result is complete when the chain reaches
/// the whole deck group, which certifies that the universal cover exists and
/// that the returned spectrum is all of it.
template <MarkedGroupBackend B>
CoveringSpectrumResult<typename B::Element> compute_cov_spectrum(const B& backend, const LengthValue& cutoff,
                                                                 const CovSpecOptions& options = {}) {
  using E = typename B::Element;
  require_same_unit(cutoff, LengthValue::zero(backend.unit()));
  if (cutoff.sign() <= 0) throw ArgumentError("cutoff must be positive");
  const LengthValue bound = cutoff.twice();

  SubgroupChain<E> chain;
  std::vector<E> gens;
  auto closure = backend.close(gens);
  auto absorb = [&](ValueClasses<E> shell) {
    ChainStep<E> step;
    step.delta = shell.value.half();
    step.value_classes = std::move(shell.classes);
    gens.insert(gens.end(), step.value_classes.begin(), step.value_classes.end());
    closure = backend.close(gens);
    chain.steps.push_back(std::move(step));
  };

  if constexpr (ShellAcceleratedBackend<B>) {
    while (closure.is_whole() != Tri::yes) {
      auto shell = backend.next_out_shell(closure, bound);
      if (!shell) break;
      absorb(std::move(*shell));
    }
  } else {
    for (auto& shell : backend.enumerate_values(bound)) {
      if (closure.is_whole() == Tri::yes) break;
      bool out = false;
      bool unknown = false;
      for (const auto& c : shell.classes) {
        Membership m = closure.contains(c);
        out = out || m == Membership::out;
        unknown = unknown || m == Membership::unknown;
      }
      if (out)
        absorb(std::move(shell));
      else if (unknown)
        throw IndeterminateSpectrum<E>("membership undecided for classes at m = " + shell.value.to_string(), chain);
    }
  }
  chain.complete = closure.is_whole() == Tri::yes;
  if (options.fill_short_basis) short_basis_and_multiplicity(backend, chain, options.max_subset_representatives);
  return {detail::spectrum_of(chain, backend.unit()), std::move(chain)};
}

/// The covering spectrum map f: f(g) = delta_i for the least i with g in
/// G_i, and f(e) = 0.
template <MarkedGroupBackend B>
class CoveringMap {
 public:
  using Element = typename B::Element;

  CoveringMap(const B& backend, const CoveringSpectrumResult<Element>& result) : backend_(&backend) {
    if (!result.chain.complete) throw ArgumentError("the covering map needs a complete subgroup chain");
    std::vector<Element> gens;
    for (const auto& step : result.chain.steps) {
      gens.insert(gens.end(), step.value_classes.begin(), step.value_classes.end());
      levels_.push_back(step.delta);
      closures_.push_back(backend.close(gens));
    }
  }

  LengthValue operator()(const Element& g) const {
    if (backend_->is_identity(g)) return LengthValue::zero(backend_->unit());
    for (std::size_t i = 0; i < closures_.size(); ++i) {
      switch (closures_[i].contains(g)) {
        case Membership::in:
          return levels_[i];
        case Membership::out:
          break;
        case Membership::unknown:
          throw IndeterminateSpectrumError("membership of " + backend_->describe(g).dump() + " undecided at delta " +
                                           levels_[i].to_string());
      }
    }
    throw Error("element " + backend_->describe(g).dump() + " lies outside a complete chain");
  }

  /// Index i with f(g) = delta_i, or -1 for the identity.
  int level(const Element& g) const {
    if (backend_->is_identity(g)) return -1;
    for (std::size_t i = 0; i < closures_.size(); ++i) {
      Membership m = closures_[i].contains(g);
      if (m == Membership::in) return static_cast<int>(i);
      if (m == Membership::unknown) throw IndeterminateSpectrumError("membership undecided");
    }
    throw Error("element lies outside a complete chain");
  }

 private:
  const B* backend_;
  std::vector<LengthValue> levels_;
  std::vector<typename B::Closure> closures_;
};

template <MarkedGroupBackend B>
LengthValue covering_map_f(const B& backend, const CoveringSpectrumResult<typename B::Element>& result,
                           const typename B::Element& g) {
  return CoveringMap<B>(backend, result)(g);
}

/// Brute-force covering spectrum straight from the definition: delta = v/2
/// is in the spectrum iff the classes with m < v and those with m <= v
/// generate different normal subgroups. The two subgroups are compared by
/// the isomorphism type of their quotients, never by membership, so this
/// route is independent of the chain construction. Multiplicities are the
/// rank change of the quotient (at least 1), which is a lower bound for the
/// short-basis multiplicity.
template <MarkedGroupBackend B>
Spectrum oracle_cov_spectrum(const B& backend, const LengthValue& cutoff) {
  using E = typename B::Element;
  require_same_unit(cutoff, LengthValue::zero(backend.unit()));
  auto rank_of = [](const QuotientInvariant& q) -> Integer {
    if (q.kind == QuotientInvariant::Kind::finite) return 0;
    return q.primary;
  };
  Spectrum out(backend.unit());
  std::vector<E> below;
  auto before = backend.close(below).invariant();
  for (const auto& shell : backend.enumerate_values(cutoff.twice())) {
    std::vector<E> upto = detail::joined(below, shell.classes);
    auto after = backend.close(upto).invariant();
    if (!before || !after)
      throw IndeterminateSpectrumError("quotient type undecided at m = " + shell.value.to_string());
    if (!(*before == *after)) {
      Integer change = abs(rank_of(*after) - rank_of(*before));
      out.insert(shell.value.half(), change > 0 ? change.get_si() : 1);
    }
    below = std::move(upto);
    before = std::move(after);
  }
  return out;
}

}  // namespace covspec
