#include <doctest.h>

#include <numeric>
#include <random>

#include "pytree/core_matrix.hpp"

using namespace pytree;

namespace {

IntMat2 l2() { return {1, 0, 2, 1}; }

IntMat2 primitive_cone_matrix(long m, long n) { return {m * n, -n * n, m * m, -m * n}; }

IntMat2 random_unimodular(std::mt19937_64& rng) {
  // Product of random elementary matrices, optionally with a det -1 flip.
  std::uniform_int_distribution<int> step(-3, 3);
  IntMat2 t = IntMat2::identity();
  for (int i = 0; i < 6; ++i) {
    const int k = step(rng);
    t = t * IntMat2{1, k, 0, 1};
    t = t * IntMat2{1, 0, step(rng), 1};
  }
  if (rng() % 2 == 0) t = t * swap_matrix();
  return t;
}

}  // namespace

TEST_CASE("mul examples") {
  const IntMat2 x{7, -3, 11, 2};
  CHECK(IntMat2::identity() * x == x);
  CHECK(IntMat2{1, 2, 0, 1} * IntMat2{1, 0, 2, 1} == IntMat2{5, 2, 2, 1});
  CHECK(l2() * l2() == IntMat2{1, 0, 4, 1});
}

TEST_CASE("mul has no overflow at large magnitude") {
  const BigInt big = BigInt(1) << 200;
  const IntMat2 x{big, 0, 0, big};
  const IntMat2 sq = x * x;
  CHECK(sq.a == BigInt(1) << 400);
  CHECK(sq.det() == BigInt(1) << 800);
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(IntMat2::identity(), e_matrix()) == e_matrix());
  CHECK(conjugate(l2(), e_matrix()) == IntMat2{2, -1, 4, -2});
  CHECK(conjugate(swap_matrix(), e_matrix()) == e_matrix().transpose());
  CHECK_THROWS_AS(conjugate(IntMat2{2, 0, 0, 1}, e_matrix()), std::domain_error);
  CHECK_THROWS_AS(conjugate(IntMat2::zero(), e_matrix()), std::domain_error);
}

TEST_CASE("conjugation preserves trace and determinant") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> entry(-50, 50);
  for (int i = 0; i < 2000; ++i) {
    const IntMat2 t = random_unimodular(rng);
    REQUIRE((t.det() == 1 || t.det() == -1));
    const IntMat2 x{entry(rng), entry(rng), entry(rng), entry(rng)};
    const IntMat2 y = conjugate(t, x);
    CHECK(y.trace() == x.trace());
    CHECK(y.det() == x.det());
  }
}

TEST_CASE("is_nilpotent examples") {
  CHECK(is_nilpotent(e_matrix()));
  CHECK(is_nilpotent(IntMat2{2, -1, 4, -2}));
  CHECK_FALSE(is_nilpotent(IntMat2::identity()));
  CHECK(is_nilpotent(IntMat2::zero()));
}

TEST_CASE("is_nilpotent matches X^2 = 0 on every trace-zero matrix with entries in [-20, 20]") {
  long count = 0;
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      for (long c = -20; c <= 20; ++c) {
        const IntMat2 x{a, b, c, -a};
        const IntMat2 sq = x * x;
        // Direct entrywise square: a^2 + bc on the diagonal, 0 off it.
        const bool square_zero = a * a + b * c == 0;
        REQUIRE(sq.is_zero() == square_zero);
        REQUIRE(is_nilpotent(x) == square_zero);
        count += square_zero;
      }
    }
  }
  CHECK(count > 0);
}

TEST_CASE("NilpotentMat enforces its invariant") {
  CHECK_NOTHROW(NilpotentMat(2, -1, 4));
  CHECK_THROWS_AS(NilpotentMat(1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(NilpotentMat::from_matrix(IntMat2::identity()), std::invalid_argument);
  CHECK(NilpotentMat::from_matrix(IntMat2{2, -1, 4, -2}).matrix() == IntMat2{2, -1, 4, -2});
}

TEST_CASE("decompose examples") {
  CHECK(decompose(NilpotentMat(0, -1, 0)) == NilpotentDecomposition{1, 0, 1, 1});
  CHECK(decompose(NilpotentMat(2, -1, 4)) == NilpotentDecomposition{1, 2, 1, 1});
  CHECK(decompose(NilpotentMat(6, -3, 12)) == NilpotentDecomposition{3, 2, 1, 1});
  CHECK(decompose(NilpotentMat(0, 0, 0)) == NilpotentDecomposition{0, 1, 0, 1});
  // -E lies on the negative sheet.
  CHECK(decompose(NilpotentMat(0, 1, 0)) == NilpotentDecomposition{1, 0, 1, -1});
}

TEST_CASE("decompose inverts reconstruction on a grid") {
  for (long m = -12; m <= 12; ++m) {
    for (long n = -12; n <= 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      const IntMat2 base = primitive_cone_matrix(m, n);
      for (long lambda = 0; lambda <= 10; ++lambda) {
        for (int sign : {1, -1}) {
          const IntMat2 x = base.scaled(lambda * sign);
          const NilpotentDecomposition d = decompose(NilpotentMat::from_matrix(x));
          REQUIRE(d.reconstruct() == x);
          REQUIRE(d.lambda == lambda);
          if (lambda == 0) {
            CHECK(d == NilpotentDecomposition{0, 1, 0, 1});
            continue;
          }
          // Same (m, n) up to the joint sign, normalized m >= 0 and n > 0 when m = 0.
          CHECK(abs(d.m) == std::abs(m));
          CHECK(abs(d.n) == std::abs(n));
          CHECK(d.m >= 0);
          if (d.m == 0) CHECK(d.n > 0);
          CHECK(gcd(d.m, d.n) == 1);
        }
      }
    }
  }
}

TEST_CASE("triple_extract examples") {
  CHECK(triple_extract(IntMat2{2, -1, 4, -2}) == TripleCoords{3, 4, 5});
  CHECK(triple_extract(e_matrix()) == TripleCoords{1, 0, 1});
  CHECK(triple_extract(IntMat2{6, -9, 4, -6}) == TripleCoords{5, 12, 13});
  CHECK_THROWS_AS(triple_extract(IntMat2::identity()), std::invalid_argument);
}

TEST_CASE("triple_extract of the (m, n) cone matrix") {
  for (long m = -15; m <= 15; ++m) {
    for (long n = -15; n <= 15; ++n) {
      const TripleCoords t = triple_extract(primitive_cone_matrix(m, n));
      CHECK(t.s == std::abs(m * m - n * n));
      CHECK(t.c == 2 * std::abs(m * n));
      CHECK(t.n == m * m + n * n);
      CHECK(t.s * t.s + t.c * t.c == t.n * t.n);
    }
  }
}
