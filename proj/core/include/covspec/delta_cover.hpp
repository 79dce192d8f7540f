#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "covspec/metric_graph.hpp"
#include "covspec/presentation.hpp"

namespace covspec {

/// Free homotopy classes of loops shorter than 2 delta; their normal closure
/// in pi_1 is the subgroup of the delta-cover.
struct RelatorSet {
  LengthValue delta;
  std::vector<FreeWord> relators;  // cyclic normal forms, by length then word
};

struct CoverBounds {
  std::size_t max_cosets = kDefaultMaxCosets;
  std::size_t max_classes = kDefaultMaxClasses;
};

/// Deck group G(Y, delta) = pi_1 / <<relators>>.
struct DeckGroupReport {
  enum class Kind { finite, free_rank, indeterminate };
  Kind kind = Kind::indeterminate;
  std::size_t order = 0;                   // finite
  std::vector<std::vector<int>> action;    // finite: permutation of the cosets by each generator
  int rank = 0;                            // free_rank
  std::string detail;
};

enum class LiftResult { closed, open, unknown };

std::string_view to_string(DeckGroupReport::Kind kind) noexcept;
std::string_view to_string(LiftResult r) noexcept;

RelatorSet relators(const MetricGraph& graph, const LengthValue& delta,
                    std::size_t max_classes = kDefaultMaxClasses);
Presentation delta_presentation(const MetricGraph& graph, const LengthValue& delta,
                                std::size_t max_classes = kDefaultMaxClasses);

/// Bouquets are decided by deleting the short loops: the quotient is free on
/// the loops of length >= 2 delta (trivial, reported as Finite(1), when none
/// survive). Other graphs report Finite when coset enumeration closes and
/// Indeterminate otherwise.
DeckGroupReport deck_group(const MetricGraph& graph, const LengthValue& delta, const CoverBounds& bounds = {});

/// Whether the loop w lifts to a closed loop in the delta-cover.
LiftResult lifts_closed(const MetricGraph& graph, const FreeWord& w, const LengthValue& delta,
                        const CoverBounds& bounds = {});

/// A class g with m(g) = 2 delta that lifts open at delta and closed just
/// above it. Throws when no such class is found.
FreeWord delta_pair_witness(const MetricGraph& graph, const LengthValue& delta, const CoverBounds& bounds = {});

/// Covering graph of a finite transitive action of pi_1: vertex (v, c) is
/// numbered c * |V| + v, and the edge carrying generator g_k runs from
/// (u, c) to (v, c . g_k).
MetricGraph cover_from_action(const MetricGraph& graph, const std::vector<std::vector<int>>& action);

/// The delta-cover as an explicit graph; needs a finite deck group.
MetricGraph cover_graph(const MetricGraph& graph, const LengthValue& delta, const CoverBounds& bounds = {});

}  // namespace covspec
