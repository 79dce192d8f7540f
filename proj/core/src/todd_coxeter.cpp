#include "covspec/todd_coxeter.hpp"

#include <string>

#include "covspec/errors.hpp"

namespace covspec {

CosetTable::CosetTable(int generators, std::vector<std::vector<int>> rows)
    : generators_(generators), rows_(std::move(rows)) {}

int CosetTable::act(int coset, const FreeWord& w) const {
  for (Letter l : w.letters()) coset = act(coset, l);
  return coset;
}

std::vector<int> CosetTable::permutation(int generator) const {
  std::vector<int> image(rows_.size());
  for (std::size_t c = 0; c < rows_.size(); ++c) image[c] = act(static_cast<int>(c), generator);
  return image;
}

namespace {

class HltEnumerator {
 public:
  HltEnumerator(int generators, std::size_t max_cosets)
      : columns_(2 * generators), max_cosets_(max_cosets) {
    table_.emplace_back(static_cast<std::size_t>(columns_), -1);
    parent_.push_back(0);
  }

  bool overflowed() const noexcept { return overflow_; }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }
  std::size_t defined() const noexcept { return table_.size(); }

  void scan_and_fill(int coset, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = coset;
    int b = coset;
    std::ptrdiff_t i = 0;
    auto j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    while (true) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) >= 0) {
        f = entry(f, w[static_cast<std::size_t>(i)]);
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) {
        b = entry(b, w[static_cast<std::size_t>(j)] ^ 1);
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[static_cast<std::size_t>(i)], b);
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
      if (overflow_) return;
    }
  }

  void fill_row(int coset) {
    for (int x = 0; x < columns_ && live(coset); ++x) {
      if (entry(coset, x) < 0) define(coset, x);
      if (overflow_) return;
    }
  }

  CosetTable standardised(int generators) const {
    std::vector<int> index(table_.size(), -1);
    int next = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (parent_[c] == static_cast<int>(c)) index[c] = next++;
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(next));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (index[c] < 0) continue;
      std::vector<int> row(static_cast<std::size_t>(columns_));
      for (int x = 0; x < columns_; ++x) {
        int target = table_[c][static_cast<std::size_t>(x)];
        if (target < 0 || index[static_cast<std::size_t>(target)] < 0)
          throw Error("coset enumeration produced an incomplete table");
        row[static_cast<std::size_t>(x)] = index[static_cast<std::size_t>(target)];
      }
      rows.push_back(std::move(row));
    }
    return CosetTable(generators, std::move(rows));
  }

 private:
  int entry(int c, int x) const { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }
  void set(int c, int x, int d) {
    table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
    table_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x ^ 1)] = c;
  }

  void define(int c, int x) {
    if (table_.size() >= max_cosets_) {
      overflow_ = true;
      return;
    }
    const int d = static_cast<int>(table_.size());
    table_.emplace_back(static_cast<std::size_t>(columns_), -1);
    parent_.push_back(d);
    set(c, x, d);
  }

  int rep(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      int up = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = up;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int phi = rep(k);
    int psi = rep(l);
    if (phi == psi) return;
    int mu = std::min(phi, psi);
    int nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    queue.push_back(nu);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int dead = queue[q];
      for (int x = 0; x < columns_; ++x) {
        const int d = entry(dead, x);
        if (d < 0) continue;
        table_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x ^ 1)] = -1;
        const int mu = rep(dead);
        const int nu = rep(d);
        if (entry(mu, x) >= 0) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, x ^ 1) >= 0) {
          merge(mu, entry(nu, x ^ 1), queue);
        } else {
          set(mu, x, nu);
        }
      }
    }
  }

  int columns_;
  std::size_t max_cosets_;
  bool overflow_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

std::vector<int> columns_of(const FreeWord& w) {
  std::vector<int> cols;
  cols.reserve(w.size());
  for (Letter l : w.letters()) cols.push_back(letter_rank(l));
  return cols;
}

}  // namespace

std::optional<CosetTable> enumerate_cosets(const Presentation& presentation, std::span<const FreeWord> subgroup,
                                           std::size_t max_cosets) {
  if (presentation.generators < 0) throw ArgumentError("negative generator count");
  for (const auto& r : presentation.relators)
    if (r.max_generator() > presentation.generators)
      throw ArgumentError("relator " + r.to_string() + " uses an undeclared generator");
  std::vector<std::vector<int>> relators;
  for (const auto& r : presentation.relators)
    if (!r.is_identity()) relators.push_back(columns_of(r.cyclically_reduced()));

  HltEnumerator hlt(presentation.generators, max_cosets);
  for (const auto& h : subgroup) {
    hlt.scan_and_fill(0, columns_of(h));
    if (hlt.overflowed()) return std::nullopt;
  }
  for (std::size_t c = 0; c < hlt.defined(); ++c) {
    const int coset = static_cast<int>(c);
    for (const auto& r : relators) {
      if (!hlt.live(coset)) break;
      hlt.scan_and_fill(coset, r);
      if (hlt.overflowed()) return std::nullopt;
    }
    if (hlt.live(coset)) hlt.fill_row(coset);
    if (hlt.overflowed()) return std::nullopt;
  }
  return hlt.standardised(presentation.generators);
}

}  // namespace covspec
