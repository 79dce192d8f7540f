#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace covspec {

/// Permutation of {0, ..., N-1} as its image list.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (a * b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);

/// Cycle lengths in decreasing order, fixed points included.
std::vector<int> cycle_type(const Permutation& p);

/// One-line cycle notation on the points 1..n, e.g. "(1 2 3)(4 5)"; "()"
/// or "e" is the identity.
Permutation parse_cycles(std::string_view text, int n);
std::string format_cycles(const Permutation& p);

/// G, H1, H2 acting on {0..N-1}. An empty generator list for G means the
/// full symmetric group.
struct PermGroupTriple {
  int degree = 0;
  std::vector<Permutation> g_generators;
  std::vector<Permutation> h1;
  std::vector<Permutation> h2;
};

struct ClassCount {
  std::string label;  // cycle type, or a class representative in cycle notation
  std::size_t h1 = 0;
  std::size_t h2 = 0;
};

struct SunadaReport {
  bool holds = false;
  std::vector<ClassCount> table;  // only classes that meet H1 or H2
};

inline constexpr std::size_t kMaxGroupOrder = 1'000'000;

/// #(C n H1) = #(C n H2) for every conjugacy class C of G.
SunadaReport sunada_condition(const PermGroupTriple& triple);

/// Finite group by its multiplication table; element 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  /// (Z/p)^k.
  static FiniteGroup elementary_abelian(int p, int k);
  /// Triples (a, b, c) mod p with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  static FiniteGroup heisenberg_mod_p(int p);

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return static_cast<int>(table_.size()); }
  int multiply(int x, int y) const { return table_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; }
  int element_order(int x) const;
  int exponent() const;

  /// x -> g x for each element g.
  std::vector<Permutation> left_regular_embedding() const;
  /// Size of the subgroup generated by `generators`.
  int generated_order(const std::vector<int>& generators) const;
  /// Fewest elements that generate the group, by exhaustive search.
  int minimal_generating_set_size() const;

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
};

struct KomatsuReport {
  bool holds = false;
  /// Every nontrivial element of both regular embeddings has cycle type (p, ..., p).
  bool uniform_cycle_type = false;
  std::size_t nontrivial_count_h1 = 0;
  std::size_t nontrivial_count_h2 = 0;
  SunadaReport sunada;
};

/// Embeds H1 and H2 left-regularly into the symmetric group on |H| points and
/// checks the Sunada condition there. Throws ArgumentError unless p is an
/// odd prime, both groups have exponent p and their orders agree.
KomatsuReport komatsu_check(const FiniteGroup& h1, const FiniteGroup& h2, int p);

}  // namespace covspec
