#include "covspec/graph_backend.hpp"

#include "covspec/errors.hpp"

namespace covspec {

GraphBackend::GraphBackend(MetricGraph graph, std::size_t max_cosets, std::size_t max_classes)
    : graph_(std::move(graph)), max_cosets_(max_cosets), max_classes_(max_classes) {}

std::vector<ValueClasses<GraphBackend::Element>> GraphBackend::enumerate_values(const LengthValue& cutoff) const {
  std::vector<ValueClasses<Element>> out;
  for (auto& shell : graph_.enumerate_min_classes(cutoff, max_classes_))
    out.push_back({graph_.length(shell.length), std::move(shell.classes)});
  return out;
}

GraphBackend::Closure GraphBackend::close(const std::vector<Element>& words) const {
  Presentation p{graph_.generator_count(), words};
  return Closure(PresentedQuotient(p, max_cosets_));
}

BouquetBackend::BouquetBackend(MetricGraph graph, std::size_t max_cosets, std::size_t max_classes)
    : GraphBackend(std::move(graph), max_cosets, max_classes) {
  if (!graph_.is_bouquet()) throw ArgumentError("bouquet backend needs a single-vertex graph");
}

std::optional<ValueClasses<BouquetBackend::Element>> BouquetBackend::next_out_shell(const Closure& closure,
                                                                                     const LengthValue& cutoff) const {
  const int r = graph_.generator_count();
  const auto& q = closure.quotient();
  // Deletion applies when the closure is the kernel of killing the
  // generators it contains; that is the case along the chain.
  bool deletion = q.kind() == PresentedQuotient::Kind::free;
  int surviving = 0;
  for (int k = 1; deletion && k <= r; ++k) {
    Membership m = q.contains(FreeWord::generator(k));
    if (m == Membership::unknown) deletion = false;
    surviving += m == Membership::out;
  }
  if (deletion && surviving == q.free_rank()) {
    std::optional<ValueClasses<Element>> best;
    for (int k = 1; k <= r; ++k) {
      if (q.contains(FreeWord::generator(k)) == Membership::in) continue;
      LengthValue v = graph_.length(graph_.generator_length(k));
      if (v > cutoff) continue;
      if (!best || v < best->value)
        best = ValueClasses<Element>{v, {FreeWord::generator(k)}};
      else if (v == best->value)
        best->classes.push_back(FreeWord::generator(k));
    }
    return best;
  }
  for (auto& shell : enumerate_values(cutoff)) {
    bool out = false;
    for (const auto& w : shell.classes) {
      Membership m = q.contains(w);
      if (m == Membership::unknown)
        throw IndeterminateSpectrumError("membership undecided for " + w.to_string());
      out = out || m == Membership::out;
    }
    if (out) return shell;
  }
  return std::nullopt;
}

}  // namespace covspec
