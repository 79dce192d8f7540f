#include "covspec/delta_cover.hpp"

#include "covspec/errors.hpp"

namespace covspec {

std::string_view to_string(DeckGroupReport::Kind kind) noexcept {
  switch (kind) {
    case DeckGroupReport::Kind::finite:
      return "finite";
    case DeckGroupReport::Kind::free_rank:
      return "free_rank";
    case DeckGroupReport::Kind::indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::string_view to_string(LiftResult r) noexcept {
  switch (r) {
    case LiftResult::closed:
      return "closed";
    case LiftResult::open:
      return "open";
    case LiftResult::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

void check_delta(const MetricGraph& graph, const LengthValue& delta) {
  require_same_unit(delta, graph.length(0));
  if (delta.sign() <= 0) throw ArgumentError("delta must be positive");
}

// Image of each generator after killing the bouquet loops shorter than 2 delta.
std::vector<FreeWord> bouquet_deletion(const MetricGraph& graph, const LengthValue& bound) {
  std::vector<FreeWord> images;
  for (int k = 1; k <= graph.generator_count(); ++k)
    images.push_back(graph.length(graph.generator_length(k)) < bound ? FreeWord() : FreeWord::generator(k));
  return images;
}

}  // namespace

RelatorSet relators(const MetricGraph& graph, const LengthValue& delta, std::size_t max_classes) {
  check_delta(graph, delta);
  const LengthValue bound = delta.twice();
  RelatorSet out{delta, {}};
  for (auto& shell : graph.enumerate_min_classes(bound, max_classes)) {
    if (!(graph.length(shell.length) < bound)) break;
    for (auto& w : shell.classes) out.relators.push_back(std::move(w));
  }
  return out;
}

Presentation delta_presentation(const MetricGraph& graph, const LengthValue& delta, std::size_t max_classes) {
  return {graph.generator_count(), relators(graph, delta, max_classes).relators};
}

DeckGroupReport deck_group(const MetricGraph& graph, const LengthValue& delta, const CoverBounds& bounds) {
  check_delta(graph, delta);
  DeckGroupReport report;
  if (graph.is_bouquet()) {
    int rank = 0;
    for (const auto& img : bouquet_deletion(graph, delta.twice())) rank += !img.is_identity();
    if (rank == 0) {
      report.kind = DeckGroupReport::Kind::finite;
      report.order = 1;
      report.action.assign(static_cast<std::size_t>(graph.generator_count()), std::vector<int>{0});
    } else {
      report.kind = DeckGroupReport::Kind::free_rank;
      report.rank = rank;
    }
    return report;
  }
  PresentedQuotient q(delta_presentation(graph, delta, bounds.max_classes), bounds.max_cosets);
  switch (q.kind()) {
    case PresentedQuotient::Kind::finite:
      report.kind = DeckGroupReport::Kind::finite;
      report.order = q.order();
      report.action = q.generator_action();
      break;
    case PresentedQuotient::Kind::free:
      report.kind = DeckGroupReport::Kind::indeterminate;
      report.detail = "infinite: Tietze reduction leaves a free group of rank " + std::to_string(q.free_rank());
      break;
    case PresentedQuotient::Kind::unknown:
      report.kind = DeckGroupReport::Kind::indeterminate;
      report.detail = "coset enumeration exceeded " + std::to_string(bounds.max_cosets) + " cosets";
      break;
  }
  return report;
}

LiftResult lifts_closed(const MetricGraph& graph, const FreeWord& w, const LengthValue& delta,
                        const CoverBounds& bounds) {
  check_delta(graph, delta);
  if (w.max_generator() > graph.generator_count())
    throw ArgumentError("word " + w.to_string() + " uses an unknown generator");
  if (graph.is_bouquet())
    return substitute(w, bouquet_deletion(graph, delta.twice())).is_identity() ? LiftResult::closed
                                                                                  : LiftResult::open;
  PresentedQuotient q(delta_presentation(graph, delta, bounds.max_classes), bounds.max_cosets);
  switch (q.contains(w)) {
    case Membership::in:
      return LiftResult::closed;
    case Membership::out:
      return LiftResult::open;
    case Membership::unknown:
      return LiftResult::unknown;
  }
  return LiftResult::unknown;
}

FreeWord delta_pair_witness(const MetricGraph& graph, const LengthValue& delta, const CoverBounds& bounds) {
  check_delta(graph, delta);
  const LengthValue target = delta.twice();
  auto shells = graph.enumerate_min_classes(target, bounds.max_classes);
  if (shells.empty() || !(graph.length(shells.back().length) == target))
    throw ArgumentError("no loop has length 2 * " + delta.to_string() + ", so it is not in the covering spectrum");

  // Relators for any delta' slightly above delta: every class with m <= 2 delta.
  std::vector<FreeWord> below;
  std::vector<FreeWord> upto;
  for (const auto& shell : shells) {
    for (const auto& w : shell.classes) {
      upto.push_back(w);
      if (graph.length(shell.length) < target) below.push_back(w);
    }
  }
  const int r = graph.generator_count();
  PresentedQuotient at(Presentation{r, below}, bounds.max_cosets);
  PresentedQuotient above(Presentation{r, upto}, bounds.max_cosets);
  for (const auto& w : shells.back().classes)
    if (at.contains(w) == Membership::out && above.contains(w) == Membership::in) return w;
  throw Error("no delta-pair witness at delta " + delta.to_string() + " within the enumeration bounds");
}

MetricGraph cover_from_action(const MetricGraph& graph, const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != graph.generator_count())
    throw ArgumentError("action needs one permutation per generator");
  const std::size_t k = action.empty() ? 1 : action.front().size();
  for (const auto& perm : action) {
    if (perm.size() != k) throw ArgumentError("permutations of unequal degree");
    std::vector<bool> hit(k, false);
    for (int x : perm) {
      if (x < 0 || static_cast<std::size_t>(x) >= k || hit[static_cast<std::size_t>(x)])
        throw ArgumentError("action entry is not a permutation");
      hit[static_cast<std::size_t>(x)] = true;
    }
  }
  const int n = graph.vertex_count();
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t e = 0; e < graph.edges().size(); ++e) {
      const Edge& edge = graph.edges()[e];
      const int gen = graph.generator_of_edge(static_cast<int>(e));
      const std::size_t target = gen == 0 ? c : static_cast<std::size_t>(action[static_cast<std::size_t>(gen - 1)][c]);
      edges.push_back({static_cast<int>(c) * n + edge.u, static_cast<int>(target) * n + edge.v, edge.length});
    }
  }
  return MetricGraph(static_cast<int>(k) * n, std::move(edges), graph.unit());
}

MetricGraph cover_graph(const MetricGraph& graph, const LengthValue& delta, const CoverBounds& bounds) {
  DeckGroupReport report = deck_group(graph, delta, bounds);
  if (report.kind != DeckGroupReport::Kind::finite)
    throw UnsupportedCover("the deck group at delta " + delta.to_string() + " is not known to be finite");
  return cover_from_action(graph, report.action);
}

}  // namespace covspec
