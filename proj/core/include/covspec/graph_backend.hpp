#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "covspec/cov_spectrum.hpp"
#include "covspec/metric_graph.hpp"
#include "covspec/presentation.hpp"

namespace covspec {

/// Metric graph as a marked group: elements are words over the spanning-tree
/// basis of pi_1, m is the length of the cyclically reduced loop, and the
/// normal closure of a set of words is decided by Tietze elimination (exact
/// when the quotient comes out free) and bounded coset enumeration.
class GraphBackend {
 public:
  using Element = FreeWord;

  class Closure {
   public:
    explicit Closure(PresentedQuotient q) : q_(std::move(q)) {}
    Membership contains(const Element& w) const { return q_.contains(w); }
    Tri is_whole() const { return q_.is_trivial(); }
    std::optional<QuotientInvariant> invariant() const { return q_.invariant(); }
    const PresentedQuotient& quotient() const noexcept { return q_; }

   private:
    PresentedQuotient q_;
  };

  explicit GraphBackend(MetricGraph graph, std::size_t max_cosets = kDefaultMaxCosets,
                        std::size_t max_classes = kDefaultMaxClasses);

  const MetricGraph& graph() const noexcept { return graph_; }
  Unit unit() const noexcept { return graph_.unit(); }

  Element identity() const { return {}; }
  bool is_identity(const Element& w) const { return w.is_identity(); }
  Element compose(const Element& a, const Element& b) const { return a * b; }
  Element invert(const Element& w) const { return w.inverse(); }
  LengthValue m_value(const Element& w) const { return graph_.min_marked_length(w); }

  std::vector<ValueClasses<Element>> enumerate_values(const LengthValue& cutoff) const;
  Closure close(const std::vector<Element>& words) const;
  nlohmann::json describe(const Element& w) const { return w.to_string(); }

  /// Every CovSpec value lies in (0, diam].
  LengthValue default_cutoff() const { return graph_.length(graph_.diameter()); }

 protected:
  MetricGraph graph_;
  std::size_t max_cosets_;
  std::size_t max_classes_;
};

/// Bouquet of circles. The normal closure of a set of generators is the
/// kernel of deleting them, so the next step of the chain is always the
/// shortest surviving loop; next_out_shell jumps to it without enumerating
/// the (exponentially many) longer words in between. The returned shell
/// lists only the classes that are not yet absorbed.
class BouquetBackend : public GraphBackend {
 public:
  explicit BouquetBackend(MetricGraph graph, std::size_t max_cosets = kDefaultMaxCosets,
                          std::size_t max_classes = kDefaultMaxClasses);

  std::optional<ValueClasses<Element>> next_out_shell(const Closure& closure, const LengthValue& cutoff) const;
};

static_assert(MarkedGroupBackend<GraphBackend>);
static_assert(ShellAcceleratedBackend<BouquetBackend>);
static_assert(!ShellAcceleratedBackend<GraphBackend>);

}  // namespace covspec
