#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "rescone/error.hpp"
#include "rescone/matrix.hpp"
#include "rescone/rational.hpp"

#define EXPECT_ERRC(stmt, errc)                                              \
  do {                                                                        \
    try {                                                                     \
      (void)(stmt);                                                           \
      ADD_FAILURE() << #stmt " did not throw";                                \
    } catch (const ::rescone::Error& e_) {                                    \
      EXPECT_EQ(e_.code(), errc) << e_.what();                                \
    }                                                                         \
  } while (0)

namespace rescone::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return {num(rng), den(rng)};
}

// Low-rank-prone matrices: entries drawn from a small range, some rows built
// as combinations of earlier ones.
inline RatMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::vector<RatVector> out;
  std::bernoulli_distribution dependent(0.3);
  for (std::size_t r = 0; r < rows; ++r) {
    RatVector row(cols);
    if (r >= 2 && dependent(rng)) {
      const Rational a = random_rational(rng, 3, 2), b = random_rational(rng, 3, 2);
      for (std::size_t c = 0; c < cols; ++c) row[c] = a * out[r - 1][c] + b * out[r - 2][c];
    } else {
      for (auto& x : row) x = random_rational(rng, 4, 3);
    }
    out.push_back(std::move(row));
  }
  return RatMatrix::from_rows(out);
}

// Fraction-free Bareiss elimination on the row-scaled integer matrix.
inline std::size_t bareiss_rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpq_class v = m(r, c).raw() * l;
      a[r][c] = v.get_num();
    }
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace rescone::testing
