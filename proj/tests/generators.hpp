#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "padyn/matrix.hpp"
#include "padyn/rational.hpp"

namespace padyn::testing {

inline long uniform(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(std::mt19937& rng, long num_bound = 30, long den_bound = 12) {
  Rational r(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

inline long random_coprime(std::mt19937& rng, std::uint64_t p, long bound) {
  for (;;) {
    const long n = uniform(rng, -bound, bound);
    if (n != 0 && n % static_cast<long>(p) != 0) return n;
  }
}

/// A random p-adic unit in Q.
inline Rational random_unit(std::mt19937& rng, std::uint64_t p) {
  Rational u(random_coprime(rng, p, 20), std::abs(random_coprime(rng, p, 9)));
  u.canonicalize();
  return u;
}

/// Invertible integer matrix: unit lower times unit upper triangular, so the
/// determinant is 1 and the inverse is integral too.
inline Matrix random_unimodular(std::mt19937& rng, std::size_t n, long bound = 3) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = uniform(rng, -bound, bound);
      u(j, i) = uniform(rng, -bound, bound);
    }
  }
  return l * u;
}

/// Invertible rational matrix with arbitrary determinant.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, 6, 4);
    if (m.determinant() != 0) return m;
  }
}

/// Matrix with prescribed eigenvalues: upper triangular with the given
/// diagonal and random entries above it, conjugated by a random change of
/// basis. Repeated eigenvalues usually give nontrivial Jordan blocks.
inline Matrix with_eigenvalues(std::mt19937& rng, const std::vector<Rational>& eigenvalues) {
  const std::size_t n = eigenvalues.size();
  Matrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    t(i, i) = eigenvalues[i];
    for (std::size_t j = i + 1; j < n; ++j) t(i, j) = uniform(rng, -2, 2);
  }
  const Matrix c = random_invertible(rng, n);
  return c * t * c.inverse();
}

struct CorpusEntry {
  Matrix matrix;
  /// Valuations of the eigenvalues, one per eigenvalue.
  std::vector<long> valuations;
};

/// Matrices of size 1..4 whose eigenvalues are p^s times a unit, s in
/// [-3, 3]. Every third entry has a unit eigenvalue.
inline std::vector<CorpusEntry> eigenvalue_corpus(std::mt19937& rng, std::uint64_t p, std::size_t count) {
  const PrimeContext ctx(p);
  std::vector<CorpusEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
    CorpusEntry e;
    std::vector<Rational> eig;
    for (std::size_t k = 0; k < n; ++k) {
      long s = uniform(rng, -3, 3);
      // Every third matrix gets a unit eigenvalue, the rest none.
      if (i % 3 == 0 && k == 0) s = 0;
      if (i % 3 != 0 && s == 0) s = 1;
      if (k > 0 && uniform(rng, 0, 3) == 0) {
        eig.push_back(eig.back());
        e.valuations.push_back(e.valuations.back());
        continue;
      }
      eig.push_back(ctx.power(s) * random_unit(rng, p));
      e.valuations.push_back(s);
    }
    e.matrix = with_eigenvalues(rng, eig);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace padyn::testing
