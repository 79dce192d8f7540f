#include "covspec/sunada.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "covspec/errors.hpp"

namespace covspec {

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ArgumentError("permutations of different degree");
  Permutation c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<std::size_t>(b[x])];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) q[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return q;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> hit(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::vector<int> cycle_type(const Permutation& p) {
  if (!is_permutation(p)) throw ArgumentError("not a permutation");
  std::vector<bool> seen(p.size(), false);
  std::vector<int> type;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
      seen[y] = true;
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

Permutation parse_cycles(std::string_view text, int n) {
  if (n < 0) throw ArgumentError("negative degree");
  Permutation p = identity_permutation(n);
  std::string s(text);
  if (s.find_first_not_of(" \t") == std::string::npos || s == "e") return p;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t i = 0;
  auto fail = [&]() { throw ArgumentError("malformed cycle notation '" + s + "'"); };
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    if (s[i] != '(') fail();
    const std::size_t close = s.find(')', i);
    if (close == std::string::npos) fail();
    std::istringstream in(s.substr(i + 1, close - i - 1));
    std::vector<int> cycle;
    std::string token;
    while (in >> token) {
      std::string t = token;
      std::erase(t, ',');
      if (t.empty()) continue;
      int point = 0;
      try {
        std::size_t used_chars = 0;
        point = std::stoi(t, &used_chars);
        if (used_chars != t.size()) fail();
      } catch (const std::logic_error&) {
        fail();
      }
      if (point < 1 || point > n) throw ArgumentError("point " + t + " outside 1.." + std::to_string(n));
      if (used[static_cast<std::size_t>(point - 1)]) throw ArgumentError("point " + t + " repeated in '" + s + "'");
      used[static_cast<std::size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    i = close + 1;
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  std::string out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == static_cast<int>(x)) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(p[y])) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

std::string type_label(const std::vector<int>& type) {
  std::string s = "(";
  for (std::size_t k = 0; k < type.size(); ++k) s += (k ? "," : "") + std::to_string(type[k]);
  return s + ")";
}

std::set<Permutation> closure_of(const std::vector<Permutation>& generators, int degree) {
  std::set<Permutation> elements{identity_permutation(degree)};
  std::vector<Permutation> frontier{identity_permutation(degree)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Permutation y = compose(g, x);
        if (elements.insert(y).second) {
          if (elements.size() > kMaxGroupOrder)
            throw EnumerationLimit("group order exceeds " + std::to_string(kMaxGroupOrder));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return elements;
}

// Least element of the conjugacy class of x under the group generated by gens.
Permutation class_representative(const Permutation& x, const std::vector<Permutation>& gens) {
  std::set<Permutation> orbit{x};
  std::vector<Permutation> frontier{x};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& y : frontier)
      for (const auto& g : gens) {
        Permutation z = compose(compose(g, y), inverse(g));
        if (orbit.insert(z).second) next.push_back(std::move(z));
      }
    frontier = std::move(next);
  }
  return *orbit.begin();
}

}  // namespace

SunadaReport sunada_condition(const PermGroupTriple& t) {
  const int n = t.degree;
  auto check = [n](const std::vector<Permutation>& perms, const char* what) {
    for (const auto& p : perms)
      if (static_cast<int>(p.size()) != n || !is_permutation(p))
        throw ArgumentError(std::string(what) + " contains an element that is not a permutation of degree " +
                            std::to_string(n));
  };
  check(t.g_generators, "G");
  check(t.h1, "H1");
  check(t.h2, "H2");
  if (t.h1.size() != t.h2.size()) throw ArgumentError("H1 and H2 must have the same order");

  const bool symmetric = t.g_generators.empty();
  std::function<std::string(const Permutation&)> label;
  if (symmetric) {
    label = [](const Permutation& p) { return type_label(cycle_type(p)); };
  } else {
    const auto g = closure_of(t.g_generators, n);
    for (const auto* h : {&t.h1, &t.h2})
      for (const auto& p : *h)
        if (!g.contains(p)) throw ArgumentError("element " + format_cycles(p) + " of H is not in G");
    label = [&t](const Permutation& p) { return format_cycles(class_representative(p, t.g_generators)); };
  }

  std::map<std::string, ClassCount> counts;
  for (const auto& p : t.h1) {
    auto& c = counts[label(p)];
    ++c.h1;
  }
  for (const auto& p : t.h2) {
    auto& c = counts[label(p)];
    ++c.h2;
  }
  SunadaReport report;
  report.holds = true;
  for (auto& [name, c] : counts) {
    c.label = name;
    report.holds = report.holds && c.h1 == c.h2;
    report.table.push_back(c);
  }
  return report;
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw ArgumentError("a group needs at least one element");
  for (std::size_t x = 0; x < n; ++x) {
    if (table_[x].size() != n) throw ArgumentError("multiplication table must be square");
    Permutation row(table_[x].begin(), table_[x].end());
    if (!is_permutation(row)) throw ArgumentError("multiplication table rows must be permutations");
    if (table_[0][x] != static_cast<int>(x) || table_[x][0] != static_cast<int>(x))
      throw ArgumentError("element 0 must be the identity");
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ArgumentError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (x + y) % n;
  return FiniteGroup("Z/" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::elementary_abelian(int p, int k) {
  if (p < 2 || k < 1) throw ArgumentError("elementary abelian group needs p >= 2 and k >= 1");
  int order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int z = 0;
      int scale = 1;
      for (int i = 0, a = x, b = y; i < k; ++i, a /= p, b /= p, scale *= p) z += ((a % p + b % p) % p) * scale;
      t[x][y] = z;
    }
  return FiniteGroup("(Z/" + std::to_string(p) + ")^" + std::to_string(k), std::move(t));
}

FiniteGroup FiniteGroup::heisenberg_mod_p(int p) {
  if (p < 2) throw ArgumentError("Heisenberg group needs p >= 2");
  const int order = p * p * p;
  auto encode = [p](int a, int b, int c) { return a + p * b + p * p * c; };
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int a = x % p, b = (x / p) % p, c = x / (p * p);
      const int a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      t[x][y] = encode((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
    }
  return FiniteGroup("Heis(Z/" + std::to_string(p) + ")", std::move(t));
}

int FiniteGroup::element_order(int x) const {
  int k = 1;
  for (int y = x; y != 0; y = multiply(y, x)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int x = 0; x < order(); ++x) e = std::lcm(e, element_order(x));
  return e;
}

std::vector<Permutation> FiniteGroup::left_regular_embedding() const {
  std::vector<Permutation> out;
  for (int g = 0; g < order(); ++g) {
    Permutation p(static_cast<std::size_t>(order()));
    for (int x = 0; x < order(); ++x) p[static_cast<std::size_t>(x)] = multiply(g, x);
    out.push_back(std::move(p));
  }
  return out;
}

int FiniteGroup::generated_order(const std::vector<int>& generators) const {
  std::vector<bool> in(static_cast<std::size_t>(order()), false);
  std::vector<int> queue{0};
  in[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g : generators) {
      const int y = multiply(queue[i], g);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  return static_cast<int>(queue.size());
}

int FiniteGroup::minimal_generating_set_size() const {
  if (order() == 1) return 0;
  const int n = order();
  for (int k = 1; k < n; ++k) {
    // Subsets of the nontrivial elements 1..n-1 of size k.
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
      if (generated_order(pick) == n) return k;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return n - 1;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

KomatsuReport komatsu_check(const FiniteGroup& h1, const FiniteGroup& h2, int p) {
  if (p % 2 == 0 || !is_prime(p)) throw ArgumentError(std::to_string(p) + " is not an odd prime");
  for (const auto* h : {&h1, &h2})
    if (h->exponent() != p)
      throw ArgumentError(h->name() + " has exponent " + std::to_string(h->exponent()) + ", not " + std::to_string(p));
  if (h1.order() != h2.order()) throw ArgumentError("the two groups must have the same order");

  PermGroupTriple triple;
  triple.degree = h1.order();
  triple.h1 = h1.left_regular_embedding();
  triple.h2 = h2.left_regular_embedding();

  KomatsuReport report;
  const std::vector<int> expected(static_cast<std::size_t>(triple.degree / p), p);
  report.uniform_cycle_type = true;
  for (const auto* h : {&triple.h1, &triple.h2})
    for (std::size_t g = 1; g < h->size(); ++g) report.uniform_cycle_type &= cycle_type((*h)[g]) == expected;
  report.sunada = sunada_condition(triple);
  const std::string nontrivial = type_label(expected);
  for (const auto& c : report.sunada.table)
    if (c.label == nontrivial) {
      report.nontrivial_count_h1 = c.h1;
      report.nontrivial_count_h2 = c.h2;
    }
  report.holds = report.uniform_cycle_type && report.sunada.holds;
  return report;
}

}  // namespace covspec
