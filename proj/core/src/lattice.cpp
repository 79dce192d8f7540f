#include "covspec/lattice.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "covspec/errors.hpp"

namespace covspec {

namespace {

void check_dimension(int n, int max_dimension) {
  if (n < 1) throw ArgumentError("lattice dimension must be positive");
  if (n > max_dimension)
    throw ArgumentError("lattice dimension " + std::to_string(n) + " exceeds the limit " +
                        std::to_string(max_dimension));
}

// Exact positive-definiteness test by symmetric Gaussian elimination.
bool positive_definite(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

void Lattice::finish(int max_dimension) {
  check_dimension(n_, max_dimension);
  if (exact_) {
    for (const auto& row : gram_q_)
      if (static_cast<int>(row.size()) != n_) throw ArgumentError("Gram matrix must be square");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (gram_q_[i][j] != gram_q_[j][i]) throw ArgumentError("Gram matrix must be symmetric");
    if (!positive_definite(gram_q_)) throw ArgumentError("Gram matrix must be positive definite (basis of full rank)");
    gram_d_.assign(n_, std::vector<double>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) gram_d_[i][j] = to_double(gram_q_[i][j]);
  } else {
    for (const auto& row : gram_d_)
      if (static_cast<int>(row.size()) != n_) throw ArgumentError("Gram matrix must be square");
    Eigen::MatrixXd q(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (!std::isfinite(gram_d_[i][j])) throw ArgumentError("Gram matrix entries must be finite");
        if (std::fabs(gram_d_[i][j] - gram_d_[j][i]) > 1e-15 * (1 + std::fabs(gram_d_[i][j])))
          throw ArgumentError("Gram matrix must be symmetric");
        q(i, j) = gram_d_[i][j];
      }
    Eigen::LLT<Eigen::MatrixXd> llt(q);
    if (llt.info() != Eigen::Success) throw ArgumentError("Gram matrix must be positive definite");
  }
}

Lattice Lattice::from_basis(const std::vector<std::vector<Rational>>& rows, Unit unit, int max_dimension) {
  const int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw ArgumentError("basis must be a square matrix");
  auto basis = rows;
  for (auto& r : basis)
    for (auto& x : r) x.canonicalize();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) gram[i][j] += basis[i][k] * basis[j][k];
  return from_gram(std::move(gram), unit, max_dimension);
}

Lattice Lattice::from_gram(std::vector<std::vector<Rational>> gram, Unit unit, int max_dimension) {
  Lattice l;
  l.n_ = static_cast<int>(gram.size());
  l.exact_ = true;
  l.unit_ = unit;
  for (auto& row : gram)
    for (auto& x : row) x.canonicalize();
  l.gram_q_ = std::move(gram);
  l.finish(max_dimension);
  return l;
}

Lattice Lattice::diagonal(const std::vector<Rational>& circumferences, Unit unit) {
  const std::size_t n = circumferences.size();
  std::vector<std::vector<Rational>> gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Rational c = circumferences[i];
    c.canonicalize();
    if (c <= 0) throw ArgumentError("circumferences must be positive");
    gram[i][i] = c * c;
  }
  return from_gram(std::move(gram), unit);
}

Lattice Lattice::rhombic(double theta) {
  if (!(theta > 0 && theta < M_PI)) throw ArgumentError("rhombic angle must lie in (0, pi)");
  const double c = std::cos(theta);
  return from_float_gram({{1.0, c}, {c, 1.0}});
}

Lattice Lattice::from_float_gram(std::vector<std::vector<double>> gram, Unit unit, int max_dimension) {
  Lattice l;
  l.n_ = static_cast<int>(gram.size());
  l.exact_ = false;
  l.unit_ = unit;
  l.gram_d_ = std::move(gram);
  l.finish(max_dimension);
  return l;
}

const std::vector<std::vector<Rational>>& Lattice::gram() const {
  if (!exact_) throw ArgumentError("lattice has no exact Gram matrix");
  return gram_q_;
}

Rational Lattice::norm_squared(const LatticeVector& g) const {
  if (!exact_) throw ArgumentError("lattice has no exact Gram matrix");
  if (static_cast<int>(g.size()) != n_) throw ArgumentError("vector dimension mismatch");
  Rational s = 0;
  for (int i = 0; i < n_; ++i) {
    if (g[i] == 0) continue;
    Rational row = 0;
    for (int j = 0; j < n_; ++j)
      if (g[j] != 0) row += gram_q_[i][j] * Rational(static_cast<long>(g[j]));
    s += row * Rational(static_cast<long>(g[i]));
  }
  return s;
}

double Lattice::norm_squared_double(const LatticeVector& g) const {
  if (static_cast<int>(g.size()) != n_) throw ArgumentError("vector dimension mismatch");
  double s = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s += gram_d_[i][j] * static_cast<double>(g[i]) * static_cast<double>(g[j]);
  return s;
}

LengthValue Lattice::m_value(const LatticeVector& g) const {
  if (exact_) return LengthValue::sqrt_of(norm_squared(g), unit_);
  return LengthValue::real(std::sqrt(std::max(0.0, norm_squared_double(g))), unit_);
}

LengthValue Lattice::max_basis_length() const {
  if (exact_) {
    Rational best = 0;
    for (int i = 0; i < n_; ++i) best = std::max(best, gram_q_[i][i]);
    return LengthValue::sqrt_of(best, unit_);
  }
  double best = 0;
  for (int i = 0; i < n_; ++i) best = std::max(best, gram_d_[i][i]);
  return LengthValue::real(std::sqrt(best), unit_);
}

std::vector<NormShell> enumerate_by_norm(const Lattice& lattice, const LengthValue& cutoff, std::size_t max_vectors) {
  require_same_unit(cutoff, LengthValue::zero(lattice.unit()));
  if (cutoff.sign() <= 0) throw ArgumentError("enumeration cutoff must be positive");
  const int n = lattice.dimension();

  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = lattice.gram_double()[i][j];
  Eigen::MatrixXd r = Eigen::LLT<Eigen::MatrixXd>(q).matrixU();
  // g^T Q g = sum_i d_i (g_i + sum_{j>i} mu_ij g_j)^2
  std::vector<double> d(n);
  std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    d[i] = r(i, i) * r(i, i);
    for (int j = i + 1; j < n; ++j) mu[i][j] = r(i, j) / r(i, i);
  }

  const double c = cutoff.to_double();
  const double bound = c * c * (1 + 1e-9) + 1e-12;
  const std::optional<Rational> exact_bound = cutoff.exact_square();

  std::map<Rational, std::vector<LatticeVector>> exact_shells;
  std::vector<std::pair<double, LatticeVector>> float_hits;
  std::size_t found = 0;

  LatticeVector g(n, 0);
  auto record = [&]() {
    if (std::all_of(g.begin(), g.end(), [](long long x) { return x == 0; })) return;
    if (lattice.is_exact() && exact_bound) {
      Rational nsq = lattice.norm_squared(g);
      if (nsq > *exact_bound) return;
      exact_shells[nsq].push_back(g);
    } else {
      double nsq = lattice.norm_squared_double(g);
      if (nsq > c * c * (1 + Lattice::kNormTolerance)) return;
      float_hits.emplace_back(nsq, g);
    }
    if (++found > max_vectors)
      throw EnumerationLimit("more than " + std::to_string(max_vectors) + " lattice vectors below " +
                             cutoff.to_string());
  };
  auto search = [&](auto& self, int i, double remaining) -> void {
    double center = 0;
    for (int j = i + 1; j < n; ++j) center -= mu[i][j] * static_cast<double>(g[j]);
    const double radius = std::sqrt(std::max(0.0, remaining) / d[i]);
    const auto lo = static_cast<long long>(std::ceil(center - radius - 1e-9));
    const auto hi = static_cast<long long>(std::floor(center + radius + 1e-9));
    for (long long x = lo; x <= hi; ++x) {
      g[i] = x;
      const double t = static_cast<double>(x) - center;
      const double used = d[i] * t * t;
      if (used > remaining + 1e-12 * (1 + bound)) continue;
      if (i == 0)
        record();
      else
        self(self, i - 1, remaining - used);
    }
    g[i] = 0;
  };
  search(search, n - 1, bound);

  std::vector<NormShell> shells;
  if (lattice.is_exact() && exact_bound) {
    for (auto& [nsq, vectors] : exact_shells) {
      std::sort(vectors.begin(), vectors.end());
      shells.push_back({LengthValue::sqrt_of(nsq, lattice.unit()), std::move(vectors)});
    }
    return shells;
  }
  std::sort(float_hits.begin(), float_hits.end());
  for (std::size_t i = 0; i < float_hits.size();) {
    std::size_t j = i;
    NormShell shell;
    while (j < float_hits.size() &&
           float_hits[j].first - float_hits[i].first <= Lattice::kNormTolerance * std::max(1.0, float_hits[i].first)) {
      shell.vectors.push_back(float_hits[j].second);
      ++j;
    }
    std::sort(shell.vectors.begin(), shell.vectors.end());
    shell.value = lattice.is_exact() ? LengthValue::sqrt_of(lattice.norm_squared(shell.vectors.front()), lattice.unit())
                                     : LengthValue::real(std::sqrt(float_hits[i].first), lattice.unit());
    shells.push_back(std::move(shell));
    i = j;
  }
  return shells;
}

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw ArgumentError("rows of unequal length");
  auto axpy = [](std::vector<Integer>& target, const Integer& q, const std::vector<Integer>& source) {
    for (std::size_t k = 0; k < target.size(); ++k) target[k] -= q * source[k];
  };

  std::size_t pr = 0;
  for (std::size_t col = 0; col < n && pr < m; ++col) {
    while (true) {
      std::size_t best = m;
      for (std::size_t r = pr; r < m; ++r)
        if (rows[r][col] != 0 && (best == m || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      if (best == m) break;
      std::swap(rows[pr], rows[best]);
      bool cleared = true;
      for (std::size_t r = pr + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pr][col].get_mpz_t());
        axpy(rows[r], q, rows[pr]);
        cleared = cleared && rows[r][col] == 0;
      }
      if (cleared) break;
    }
    if (rows[pr][col] == 0) continue;
    if (rows[pr][col] < 0)
      for (auto& x : rows[pr]) x = -x;
    for (std::size_t r = 0; r < pr; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pr][col].get_mpz_t());
      axpy(rows[r], q, rows[pr]);
    }
    ++pr;
  }
  rows.resize(pr);
  return rows;
}

namespace {

std::vector<Integer> to_integer(const LatticeVector& g) {
  std::vector<Integer> v;
  v.reserve(g.size());
  for (long long x : g) v.emplace_back(static_cast<long>(x));
  return v;
}

std::size_t pivot_column(const std::vector<Integer>& row) {
  std::size_t c = 0;
  while (row[c] == 0) ++c;
  return c;
}

}  // namespace

Sublattice::Sublattice(int dimension, const std::vector<LatticeVector>& generators) : n_(dimension) {
  if (dimension < 1) throw ArgumentError("sublattice dimension must be positive");
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != dimension) throw ArgumentError("generator dimension mismatch");
    rows.push_back(to_integer(g));
  }
  hnf_ = hermite_normal_form(std::move(rows));
}

bool Sublattice::contains(const LatticeVector& g) const {
  if (static_cast<int>(g.size()) != n_) throw ArgumentError("vector dimension mismatch");
  std::vector<Integer> v = to_integer(g);
  for (const auto& row : hnf_) {
    const std::size_t p = pivot_column(row);
    for (std::size_t c = 0; c < p; ++c)
      if (v[c] != 0) return false;
    if (!mpz_divisible_p(v[p].get_mpz_t(), row[p].get_mpz_t())) return false;
    Integer q = v[p] / row[p];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= q * row[k];
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool Sublattice::is_whole() const {
  if (rank() != n_) return false;
  for (const auto& row : hnf_)
    if (row[pivot_column(row)] != 1) return false;
  return true;
}

Integer Sublattice::gram_determinant() const {
  const std::size_t k = hnf_.size();
  std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < static_cast<std::size_t>(n_); ++c) g[i][j] += Rational(hnf_[i][c] * hnf_[j][c]);
  Rational det = determinant(std::move(g));
  return det.get_num();
}

Membership sublattice_membership(const LatticeVector& g, const std::vector<LatticeVector>& generators) {
  return Sublattice(static_cast<int>(g.size()), generators).contains(g) ? Membership::in : Membership::out;
}

Sublattice delta_sublattice(const Lattice& lattice, const LengthValue& delta) {
  if (delta.sign() <= 0) throw ArgumentError("delta must be positive");
  const LengthValue bound = delta.twice();
  std::vector<LatticeVector> short_vectors;
  for (const auto& shell : enumerate_by_norm(lattice, bound)) {
    if (!(shell.value < bound)) break;
    short_vectors.insert(short_vectors.end(), shell.vectors.begin(), shell.vectors.end());
  }
  return Sublattice(lattice.dimension(), short_vectors);
}

LengthValue translative_delta_length(const Lattice& lattice, const LatticeVector& g, const LengthValue& delta) {
  const Sublattice sub = delta_sublattice(lattice, delta);
  if (sub.contains(g)) return LengthValue::zero(lattice.unit());
  const LengthValue mg = lattice.m_value(g);
  for (const auto& shell : enumerate_by_norm(lattice, mg)) {
    for (const auto& v : shell.vectors) {
      LatticeVector diff(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) diff[i] = v[i] - g[i];
      if (sub.contains(diff)) return shell.value;
    }
  }
  return mg;
}

}  // namespace covspec
