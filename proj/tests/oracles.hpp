#pragma once

// Independent oracles for cross-checking the library. Everything here does
// its own index bookkeeping and avoids the library's construction paths on
// purpose: embeddings run on digit arithmetic, ranks come from hand-rolled
// Gaussian elimination, and level operators are expanded word by word.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

inline std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// digits of rank in base N, most significant first, values 0..N-1
inline std::vector<int> digits_of(std::int64_t rank, int level, int n) {
  std::vector<int> d(static_cast<std::size_t>(level));
  for (int k = level - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(rank % n);
    rank /= n;
  }
  return d;
}

inline std::int64_t rank_of(const std::vector<int>& digits, int n) {
  std::int64_t r = 0;
  for (int d : digits) r = r * n + d;
  return r;
}

// two_site acting on adjacent legs (leg, leg+1), 1-based; direct digit loops
inline Matrix leg_embed(int n, int level, const Matrix& two_site, int leg) {
  const std::int64_t dim = ipow(n, level);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::int64_t col = 0; col < dim; ++col) {
    const auto tau = digits_of(col, level, n);
    const int c = tau[static_cast<std::size_t>(leg - 1)];
    const int d = tau[static_cast<std::size_t>(leg)];
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const Complex coef = two_site(a * n + b, c * n + d);
        if (coef == Complex{0.0, 0.0}) continue;
        auto sigma = tau;
        sigma[static_cast<std::size_t>(leg - 1)] = a;
        sigma[static_cast<std::size_t>(leg)] = b;
        out(rank_of(sigma, n), col) += coef;
      }
  }
  return out;
}

// words of the level operator: W(1) = {()}, W(m+1) = shift(W(m)) * prefixes,
// where prefixes are (), (1), (1,2), ..., (1..m)
inline std::vector<std::vector<int>> pairing_words(int level) {
  std::vector<std::vector<int>> words{{}};
  for (int m = 1; m < level; ++m) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words) {
      std::vector<int> shifted(w.size());
      std::transform(w.begin(), w.end(), shifted.begin(), [](int l) { return l + 1; });
      for (int k = 0; k <= m; ++k) {
        std::vector<int> word = shifted;
        for (int l = 1; l <= k; ++l) word.push_back(l);
        next.push_back(std::move(word));
      }
    }
    words = std::move(next);
  }
  return words;
}

// brute-force word expansion of the level operator
inline Matrix word_expansion_pairing(int n, int level, const Matrix& braid) {
  const std::int64_t dim = ipow(n, level);
  Matrix total = Matrix::Zero(dim, dim);
  for (const auto& word : pairing_words(level)) {
    Matrix term = Matrix::Identity(dim, dim);
    for (int leg : word) term = term * leg_embed(n, level, braid, leg);
    total += term;
  }
  return total;
}

// sum over permutations of q^inversions, acting on positions
inline Matrix permutation_inversion_pairing(int n, int level, Complex q) {
  const std::int64_t dim = ipow(n, level);
  Matrix total = Matrix::Zero(dim, dim);
  std::vector<int> perm(static_cast<std::size_t>(level));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inv;
    Complex weight{1.0, 0.0};
    for (int k = 0; k < inv; ++k) weight *= q;
    for (std::int64_t col = 0; col < dim; ++col) {
      const auto tau = digits_of(col, level, n);
      std::vector<int> sigma(tau.size());
      for (std::size_t k = 0; k < tau.size(); ++k)
        sigma[k] = tau[static_cast<std::size_t>(perm[k])];
      total(rank_of(sigma, n), col) += weight;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline Complex q_factorial(int n, Complex q) {
  // sum over S_n of q^inv, reduced to the product of partial geometric sums
  Complex total{1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    Complex geo{0.0, 0.0};
    Complex pow{1.0, 0.0};
    for (int j = 0; j < k; ++j) {
      geo += pow;
      pow *= q;
    }
    total *= geo;
  }
  return total;
}

// rank by Gaussian elimination with partial pivoting (no Eigen decompositions)
inline std::int64_t span_rank(std::vector<std::vector<Complex>> rows, double tol = 1e-9) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  double scale = 0.0;
  for (const auto& r : rows)
    for (const auto& v : r) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    for (std::size_t r = rank + 1; r < rows.size(); ++r)
      if (std::abs(rows[r][c]) > std::abs(rows[pivot][c])) pivot = r;
    if (std::abs(rows[pivot][c]) <= tol * scale) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank) continue;
      const Complex f = rows[r][c] / rows[rank][c];
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<std::int64_t>(rank);
}

}  // namespace oracle
