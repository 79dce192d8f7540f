#include "covspec/metric_graph.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

// x <= bound, evaluated exactly when the bound is exact.
class UpperBound {
 public:
  explicit UpperBound(const LengthValue& bound) : bound_(bound) {
    if (auto sq = bound.exact_square()) square_ = *sq;
  }
  bool admits(const Rational& x) const {
    switch (bound_.kind()) {
      case LengthKind::exact_rational:
        return x <= bound_.rational_value();
      case LengthKind::exact_quadratic:
        return x <= 0 || x * x <= square_;
      case LengthKind::floating:
        return to_double(x) <= bound_.to_double();
    }
    return false;
  }

 private:
  LengthValue bound_;
  Rational square_;
};

}  // namespace

MetricGraph::MetricGraph(int vertex_count, std::vector<Edge> edges, Unit unit)
    : vertex_count_(vertex_count), edges_(std::move(edges)), unit_(unit) {
  if (vertex_count_ < 1) throw ArgumentError("a metric graph needs at least one vertex");
  const auto n = static_cast<std::size_t>(vertex_count_);
  out_darts_.assign(n, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.u < 0 || edge.v < 0 || edge.u >= vertex_count_ || edge.v >= vertex_count_)
      throw ArgumentError("edge " + std::to_string(e) + " has an endpoint outside the vertex range");
    edge.length.canonicalize();
    if (edge.length <= 0) throw ArgumentError("edge " + std::to_string(e) + " must have positive length");
    out_darts_[static_cast<std::size_t>(edge.u)].push_back(static_cast<Dart>(2 * e));
    out_darts_[static_cast<std::size_t>(edge.v)].push_back(static_cast<Dart>(2 * e + 1));
  }

  // Spanning tree by breadth-first search from vertex 0.
  parent_dart_.assign(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<bool> tree_edge(edges_.size(), false);
  std::queue<int> frontier;
  seen[0] = true;
  frontier.push(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    int x = frontier.front();
    frontier.pop();
    std::vector<Dart> darts = out_darts_[static_cast<std::size_t>(x)];
    std::sort(darts.begin(), darts.end());
    for (Dart d : darts) {
      int y = dart_head(d);
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      parent_dart_[static_cast<std::size_t>(y)] = d;
      tree_edge[static_cast<std::size_t>(dart_edge(d))] = true;
      frontier.push(y);
      ++reached;
    }
  }
  if (reached != n) throw ArgumentError("metric graph must be connected");

  edge_generator_.assign(edges_.size(), 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (tree_edge[e]) continue;
    generator_edges_.push_back(static_cast<int>(e));
    edge_generator_[e] = static_cast<int>(generator_edges_.size());
  }

  // All-pairs distances (Floyd-Warshall) with next-hop reconstruction.
  dist_.assign(n * n, Rational(-1));
  next_hop_.assign(n * n, -1);
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i) {
    dist_[at(i, i)] = 0;
    next_hop_[at(i, i)] = static_cast<int>(i);
  }
  for (const auto& edge : edges_) {
    auto u = static_cast<std::size_t>(edge.u);
    auto v = static_cast<std::size_t>(edge.v);
    if (u == v) continue;
    if (dist_[at(u, v)] < 0 || edge.length < dist_[at(u, v)]) {
      dist_[at(u, v)] = dist_[at(v, u)] = edge.length;
      next_hop_[at(u, v)] = edge.v;
      next_hop_[at(v, u)] = edge.u;
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (dist_[at(i, k)] < 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (dist_[at(k, j)] < 0) continue;
        Rational through = dist_[at(i, k)] + dist_[at(k, j)];
        if (dist_[at(i, j)] < 0 || through < dist_[at(i, j)]) {
          dist_[at(i, j)] = through;
          next_hop_[at(i, j)] = next_hop_[at(i, k)];
        }
      }
    }
}

MetricGraph MetricGraph::bouquet(std::span<const Rational> loop_lengths, Unit unit) {
  std::vector<Edge> edges;
  for (const auto& l : loop_lengths) edges.push_back(Edge{0, 0, l});
  return MetricGraph(1, std::move(edges), unit);
}

MetricGraph MetricGraph::circle(const Rational& length, Unit unit) {
  return MetricGraph(1, {Edge{0, 0, length}}, unit);
}

MetricGraph MetricGraph::theta(const Rational& a, const Rational& b, const Rational& c, Unit unit) {
  return MetricGraph(2, {Edge{0, 1, a}, Edge{0, 1, b}, Edge{0, 1, c}}, unit);
}

bool MetricGraph::is_bouquet() const noexcept {
  if (vertex_count_ != 1) return false;
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.u == e.v; });
}

int MetricGraph::dart_tail(Dart d) const {
  const auto& e = edges_.at(static_cast<std::size_t>(dart_edge(d)));
  return (d & 1) ? e.v : e.u;
}

int MetricGraph::dart_head(Dart d) const {
  const auto& e = edges_.at(static_cast<std::size_t>(dart_edge(d)));
  return (d & 1) ? e.u : e.v;
}

Rational MetricGraph::loop_length(const EdgeLoop& loop) const {
  Rational total = 0;
  for (Dart d : loop.darts) total += dart_length(d);
  return total;
}

const Rational& MetricGraph::distance(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) throw ArgumentError("vertex out of range");
  const auto n = static_cast<std::size_t>(vertex_count_);
  return dist_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)];
}

ShortestPath MetricGraph::shortest_path(int u, int v) const {
  ShortestPath path{distance(u, v), {u}};
  const auto n = static_cast<std::size_t>(vertex_count_);
  int x = u;
  while (x != v) {
    x = next_hop_[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(v)];
    path.vertices.push_back(x);
  }
  return path;
}

Rational MetricGraph::diameter() const {
  Rational best = 0;
  for (const auto& e : edges_) {
    // Two points on the same edge.
    Rational same = (e.length + distance(e.u, e.v)) / 2;
    if (same > best) best = same;
  }
  // A point at position s on edge e and the farthest point of edge f. For a
  // fixed s that distance is (D_c(s) + D_d(s) + M) / 2, concave in s, so the
  // maximum sits at an end or at a breakpoint of D_c or D_d.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    for (std::size_t j = 0; j < edges_.size(); ++j) {
      if (i == j) continue;
      const auto& f = edges_[j];
      auto to_vertex = [&](const Rational& s, int c) {
        Rational via_u = s + distance(e.u, c);
        Rational via_v = e.length - s + distance(e.v, c);
        return via_u < via_v ? via_u : via_v;
      };
      auto breakpoint = [&](int c) {
        Rational s = (e.length + distance(e.v, c) - distance(e.u, c)) / 2;
        if (s < 0) s = 0;
        if (s > e.length) s = e.length;
        return s;
      };
      for (const Rational& s : {Rational(0), e.length, breakpoint(f.u), breakpoint(f.v)}) {
        Rational far = (to_vertex(s, f.u) + to_vertex(s, f.v) + f.length) / 2;
        if (far > best) best = far;
      }
    }
  }
  return best;
}

std::vector<Dart> MetricGraph::path_from_root(int v) const {
  std::vector<Dart> path;
  while (parent_dart_[static_cast<std::size_t>(v)] >= 0) {
    Dart d = parent_dart_[static_cast<std::size_t>(v)];
    path.push_back(d);
    v = dart_tail(d);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int MetricGraph::edge_of_generator(int generator) const {
  if (generator < 1 || generator > generator_count())
    throw ArgumentError("generator g" + std::to_string(generator) + " does not exist");
  return generator_edges_[static_cast<std::size_t>(generator - 1)];
}

const Rational& MetricGraph::generator_length(int generator) const {
  return edges_[static_cast<std::size_t>(edge_of_generator(generator))].length;
}

namespace {

void append_reduced(std::vector<Dart>& out, Dart d) {
  if (!out.empty() && out.back() == reverse_dart(d))
    out.pop_back();
  else
    out.push_back(d);
}

void append_reversed_path(std::vector<Dart>& out, const std::vector<Dart>& path) {
  for (auto it = path.rbegin(); it != path.rend(); ++it) append_reduced(out, reverse_dart(*it));
}

}  // namespace

EdgeLoop MetricGraph::loop_of_word(const FreeWord& w, int basepoint) const {
  if (basepoint < 0 || basepoint >= vertex_count_) throw ArgumentError("basepoint out of range");
  if (w.max_generator() > generator_count())
    throw ArgumentError("word " + w.to_string() + " uses a generator the graph does not have");
  std::vector<Dart> darts;
  const auto base_path = path_from_root(basepoint);
  append_reversed_path(darts, base_path);
  for (Letter l : w.letters()) {
    int e = edge_of_generator(l > 0 ? l : -l);
    Dart d = l > 0 ? 2 * e : 2 * e + 1;
    for (Dart t : path_from_root(dart_tail(d))) append_reduced(darts, t);
    append_reduced(darts, d);
    append_reversed_path(darts, path_from_root(dart_head(d)));
  }
  for (Dart t : base_path) append_reduced(darts, t);
  return EdgeLoop{std::move(darts)};
}

FreeWord MetricGraph::word_of_loop(const EdgeLoop& loop) const {
  std::vector<Letter> letters;
  for (Dart d : loop.darts) {
    int k = edge_generator_.at(static_cast<std::size_t>(dart_edge(d)));
    if (k) letters.push_back((d & 1) ? -k : k);
  }
  return FreeWord(std::move(letters));
}

EdgeLoop MetricGraph::cyclically_reduce(const EdgeLoop& loop) {
  std::vector<Dart> darts;
  for (Dart d : loop.darts) append_reduced(darts, d);
  std::size_t lo = 0;
  std::size_t hi = darts.size();
  while (hi - lo >= 2 && darts[lo] == reverse_dart(darts[hi - 1])) {
    ++lo;
    --hi;
  }
  return EdgeLoop{std::vector<Dart>(darts.begin() + static_cast<std::ptrdiff_t>(lo),
                                    darts.begin() + static_cast<std::ptrdiff_t>(hi))};
}

LengthValue MetricGraph::min_marked_length(const FreeWord& w) const {
  return length(loop_length(cyclically_reduce(loop_of_word(w))));
}

namespace {

bool is_canonical_cycle(const std::vector<Dart>& seq) {
  const std::size_t n = seq.size();
  auto rotation_less = [&](const std::vector<Dart>& other, std::size_t shift) {
    for (std::size_t i = 0; i < n; ++i) {
      Dart a = other[(i + shift) % n];
      if (a != seq[i]) return a < seq[i];
    }
    return false;
  };
  for (std::size_t r = 1; r < n; ++r)
    if (rotation_less(seq, r)) return false;
  std::vector<Dart> rev(seq.rbegin(), seq.rend());
  for (auto& d : rev) d = reverse_dart(d);
  for (std::size_t r = 0; r < n; ++r)
    if (rotation_less(rev, r)) return false;
  return true;
}

}  // namespace

std::vector<MinClassShell> MetricGraph::enumerate_min_classes(const LengthValue& cutoff,
                                                              std::size_t max_classes) const {
  require_same_unit(cutoff, length(0));
  if (cutoff.sign() <= 0) throw ArgumentError("cutoff must be positive");
  const UpperBound bound(cutoff);
  const std::size_t node_budget = std::max<std::size_t>(max_classes, 1000) * 64;

  std::map<Rational, std::vector<std::pair<FreeWord, EdgeLoop>>> shells;
  std::size_t found = 0;
  std::size_t nodes = 0;
  std::vector<Dart> walk;

  const int dart_count = static_cast<int>(2 * edges_.size());
  for (Dart start = 0; start < dart_count; ++start) {
    const int home = dart_tail(start);
    // Depth-first over non-backtracking walks that use darts >= start, so
    // each cycle is produced once, from its least rotation.
    auto extend = [&](auto&& self, int at, const Rational& so_far) -> void {
      if (++nodes > node_budget)
        throw EnumerationLimit("closed-walk enumeration exceeded its node budget below cutoff " + cutoff.to_string());
      if (at == home && walk.back() != reverse_dart(start) && is_canonical_cycle(walk)) {
        if (++found > max_classes)
          throw EnumerationLimit("more than " + std::to_string(max_classes) + " loop classes below cutoff " +
                                 cutoff.to_string());
        EdgeLoop loop{walk};
        shells[so_far].emplace_back(word_of_loop(loop).cyclic_normal_form(), std::move(loop));
      }
      for (Dart d : out_darts_[static_cast<std::size_t>(at)]) {
        if (d < start || d == reverse_dart(walk.back())) continue;
        Rational next = so_far + dart_length(d);
        if (!bound.admits(next + distance(dart_head(d), home))) continue;
        walk.push_back(d);
        self(self, dart_head(d), next);
        walk.pop_back();
      }
    };
    const Rational first = dart_length(start);
    if (!bound.admits(first + distance(dart_head(start), home))) continue;
    walk.assign(1, start);
    extend(extend, dart_head(start), first);
  }

  std::vector<MinClassShell> out;
  for (auto& [len, items] : shells) {
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    MinClassShell shell{len, {}, {}};
    for (auto& [word, loop] : items) {
      shell.classes.push_back(std::move(word));
      shell.loops.push_back(std::move(loop));
    }
    out.push_back(std::move(shell));
  }
  return out;
}

Spectrum MetricGraph::length_spectrum(const LengthValue& cutoff, std::size_t max_classes) const {
  Spectrum s(unit_);
  for (const auto& shell : enumerate_min_classes(cutoff, max_classes))
    s.insert(length(shell.length), static_cast<long>(shell.classes.size()));
  return s;
}

LengthValue MetricGraph::systole() const {
  if (is_tree()) throw NoCycleError("a tree has no closed geodesics");
  const auto n = static_cast<std::size_t>(vertex_count_);
  std::optional<Rational> best;
  for (std::size_t skip = 0; skip < edges_.size(); ++skip) {
    const auto& e = edges_[skip];
    Rational candidate;
    if (e.u == e.v) {
      candidate = e.length;
    } else {
      // Dijkstra from e.u avoiding edge `skip`.
      std::vector<Rational> d(n, Rational(-1));
      std::vector<bool> done(n, false);
      d[static_cast<std::size_t>(e.u)] = 0;
      for (std::size_t iter = 0; iter < n; ++iter) {
        int x = -1;
        for (std::size_t i = 0; i < n; ++i)
          if (!done[i] && d[i] >= 0 && (x < 0 || d[i] < d[static_cast<std::size_t>(x)])) x = static_cast<int>(i);
        if (x < 0) break;
        done[static_cast<std::size_t>(x)] = true;
        for (Dart dart : out_darts_[static_cast<std::size_t>(x)]) {
          if (static_cast<std::size_t>(dart_edge(dart)) == skip) continue;
          auto y = static_cast<std::size_t>(dart_head(dart));
          Rational through = d[static_cast<std::size_t>(x)] + dart_length(dart);
          if (d[y] < 0 || through < d[y]) d[y] = through;
        }
      }
      const Rational& back = d[static_cast<std::size_t>(e.v)];
      if (back < 0) continue;  // bridge
      candidate = e.length + back;
    }
    if (!best || candidate < *best) best = candidate;
  }
  return length(*best);
}

std::vector<BasisLoop> MetricGraph::pi1_basis(int basepoint) const {
  std::vector<BasisLoop> basis;
  for (int k = 1; k <= generator_count(); ++k)
    basis.push_back(BasisLoop{k, edge_of_generator(k), loop_of_word(FreeWord::generator(k), basepoint)});
  return basis;
}

}  // namespace covspec
