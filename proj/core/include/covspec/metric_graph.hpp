#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "covspec/free_word.hpp"
#include "covspec/length.hpp"
#include "covspec/spectrum.hpp"

namespace covspec {

struct Edge {
  int u = 0;
  int v = 0;
  Rational length;
};

/// Directed traversal of an edge: dart 2e runs u -> v, dart 2e+1 runs v -> u.
using Dart = int;

inline constexpr Dart reverse_dart(Dart d) noexcept { return d ^ 1; }
inline constexpr int dart_edge(Dart d) noexcept { return d >> 1; }

/// Closed walk given by its darts; read cyclically.
struct EdgeLoop {
  std::vector<Dart> darts;

  friend bool operator==(const EdgeLoop&, const EdgeLoop&) = default;
};

struct ShortestPath {
  Rational length;
  std::vector<int> vertices;
};

/// One free generator of pi_1 together with its based representative loop.
struct BasisLoop {
  int generator = 0;
  int edge = 0;
  EdgeLoop loop;
};

/// All free homotopy classes of one length.
struct MinClassShell {
  Rational length;
  std::vector<FreeWord> classes;  // cyclic normal forms
  std::vector<EdgeLoop> loops;    // the matching cyclically reduced edge loops
};

inline constexpr std::size_t kDefaultMaxClasses = 1'000'000;

/// Connected finite graph with positive rational edge lengths.
///
/// pi_1 is presented on a breadth-first spanning tree rooted at vertex 0:
/// the non-tree edges, in index order, are the generators g1, g2, ...
class MetricGraph {
 public:
  MetricGraph(int vertex_count, std::vector<Edge> edges, Unit unit = Unit::one);

  static MetricGraph bouquet(std::span<const Rational> loop_lengths, Unit unit = Unit::one);
  static MetricGraph circle(const Rational& length, Unit unit = Unit::one);
  /// Two vertices joined by three parallel edges.
  static MetricGraph theta(const Rational& a, const Rational& b, const Rational& c, Unit unit = Unit::one);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Unit unit() const noexcept { return unit_; }

  /// Single vertex, every edge a self-loop.
  bool is_bouquet() const noexcept;
  int cycle_rank() const noexcept { return static_cast<int>(edges_.size()) - vertex_count_ + 1; }
  bool is_tree() const noexcept { return cycle_rank() == 0; }

  int dart_tail(Dart d) const;
  int dart_head(Dart d) const;
  const Rational& dart_length(Dart d) const { return edges_.at(static_cast<std::size_t>(dart_edge(d))).length; }
  Rational loop_length(const EdgeLoop& loop) const;

  const Rational& distance(int u, int v) const;
  ShortestPath shortest_path(int u, int v) const;
  /// Diameter of the metric graph, taken over all points of all edges.
  Rational diameter() const;

  std::vector<BasisLoop> pi1_basis(int basepoint = 0) const;
  int generator_count() const noexcept { return static_cast<int>(generator_edges_.size()); }
  /// Generator index of an edge, 0 for spanning-tree edges.
  int generator_of_edge(int edge) const { return edge_generator_.at(static_cast<std::size_t>(edge)); }
  int edge_of_generator(int generator) const;
  /// Loop length of a generator's edge (the m-value of g_k in a bouquet).
  const Rational& generator_length(int generator) const;

  /// Based loop at `basepoint` spelling `w` (freely reduced, not cyclically).
  EdgeLoop loop_of_word(const FreeWord& w, int basepoint = 0) const;
  FreeWord word_of_loop(const EdgeLoop& loop) const;
  /// Removes backtracking, including across the start of the cycle.
  static EdgeLoop cyclically_reduce(const EdgeLoop& loop);

  /// Length of the cyclically reduced loop in the free homotopy class of w.
  LengthValue min_marked_length(const FreeWord& w) const;

  /// Every free homotopy class with a representative of length <= cutoff,
  /// grouped by length in increasing order. Classes related by inversion
  /// are identified.
  std::vector<MinClassShell> enumerate_min_classes(const LengthValue& cutoff,
                                                   std::size_t max_classes = kDefaultMaxClasses) const;
  /// Lengths of closed geodesics up to cutoff, multiplicity = class count.
  Spectrum length_spectrum(const LengthValue& cutoff, std::size_t max_classes = kDefaultMaxClasses) const;
  /// Length of the shortest nontrivial closed geodesic.
  LengthValue systole() const;

  LengthValue length(const Rational& value) const { return LengthValue::rational(value, unit_); }

 private:
  std::vector<Dart> path_from_root(int v) const;

  int vertex_count_;
  std::vector<Edge> edges_;
  Unit unit_;
  std::vector<std::vector<Dart>> out_darts_;
  std::vector<Rational> dist_;  // row-major vertex_count^2
  std::vector<int> next_hop_;
  std::vector<Dart> parent_dart_;
  std::vector<int> edge_generator_;
  std::vector<int> generator_edges_;
};

}  // namespace covspec
