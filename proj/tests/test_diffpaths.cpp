#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pytree/diffpaths.hpp"
#include "pytree/factorize.hpp"

using namespace pytree;

namespace {

PrimTriple T(long s, long c, long n) { return PrimTriple(s, c, n); }

std::vector<PrimTriple> triples_to_level(std::size_t depth) {
  std::vector<PrimTriple> out;
  for (std::size_t k = 0; k <= depth; ++k) {
    LevelIterator it(k);
    while (auto t = it.next()) out.push_back(*t);
  }
  return out;
}

}  // namespace

TEST_CASE("differences examples") {
  CHECK(differences(T(3, 4, 5)) == Differences{1, 2, 1});
  CHECK(differences(T(15, 8, 17)) == Differences{9, 2, -7});
  CHECK(differences(T(33, 56, 65)) == Differences{9, 32, 23});
  CHECK(difference(T(15, 8, 17), DiffForm::R) == -7);
}

TEST_CASE("invariant_child_kind and difference_path examples") {
  CHECK(invariant_child_kind(DiffForm::P) == ChildKind::UMinus);
  CHECK(invariant_child_kind(DiffForm::Q) == ChildKind::LPlus);
  CHECK(invariant_child_kind(DiffForm::R) == ChildKind::UPlus);

  CHECK(difference_path(T(3, 4, 5), DiffForm::P, 4) ==
        std::vector<PrimTriple>{T(3, 4, 5), T(5, 12, 13), T(7, 24, 25), T(9, 40, 41)});
  CHECK(difference_path(T(3, 4, 5), DiffForm::R, 4) ==
        std::vector<PrimTriple>{T(3, 4, 5), T(21, 20, 29), T(119, 120, 169), T(697, 696, 985)});
  CHECK(difference_path(T(15, 8, 17), DiffForm::R, 3) ==
        std::vector<PrimTriple>{T(15, 8, 17), T(65, 72, 97), T(403, 396, 565)});
  CHECK(difference_path(T(3, 4, 5), DiffForm::P, 2) ==
        std::vector<PrimTriple>{T(3, 4, 5), T(5, 12, 13)});
  CHECK(difference_path(T(3, 4, 5), DiffForm::Q, 1) == std::vector<PrimTriple>{T(3, 4, 5)});
  CHECK(difference_path(T(3, 4, 5), DiffForm::Q, 2)[1] == T(15, 8, 17));
  CHECK_THROWS_AS(difference_path(T(3, 4, 5), DiffForm::P, 0), std::invalid_argument);

  std::vector<BigInt> r;
  for (const auto& t : difference_path(T(3, 4, 5), DiffForm::R, 4)) r.push_back(difference(t, DiffForm::R));
  CHECK(r == std::vector<BigInt>{1, -1, 1, -1});
}

TEST_CASE("differences are preserved (P, Q) or alternate (R) along their paths") {
  for (const PrimTriple& t : triples_to_level(5)) {
    for (DiffForm f : {DiffForm::P, DiffForm::Q, DiffForm::R}) {
      const auto path = difference_path(t, f, 4);
      REQUIRE(path.size() == 4);
      const BigInt d0 = difference(t, f);
      for (std::size_t i = 0; i < path.size(); ++i) {
        const BigInt want = (f == DiffForm::R && i % 2 == 1) ? BigInt(-d0) : d0;
        CHECK(difference(path[i], f) == want);
      }
    }
  }
}

TEST_CASE("is_representable_R examples") {
  CHECK(is_representable_R(17));
  CHECK(is_representable_R(89));
  CHECK_FALSE(is_representable_R(3));
  CHECK(is_representable_R(49));  // 7^2 - 8*0^2
  CHECK(is_representable_R(1));
  CHECK_THROWS_AS(is_representable_R(0), std::invalid_argument);
  CHECK_THROWS_AS(is_representable_R(8), std::invalid_argument);
}

TEST_CASE("is_representable_R agrees with a brute-force x^2 - 8y^2 scan for odd |D| <= 500") {
  int disagreements = 0;
  for (long d = -499; d <= 499; d += 2) {
    const bool want = oracle::x2_minus_8y2(d, 10000);
    const bool got = is_representable_R(d);
    if (want != got) ++disagreements;
    CHECK_MESSAGE(want == got, "D = " << d);
  }
  CHECK(disagreements == 0);
}

TEST_CASE("prime_residue_criterion disagrees with the scan, as recorded") {
  CHECK_FALSE(prime_residue_criterion(9));
  CHECK(oracle::x2_minus_8y2(9, 100));
  CHECK_FALSE(prime_residue_criterion(-7));
  CHECK(oracle::x2_minus_8y2(-7, 10));  // 1 - 8
  CHECK(prime_residue_criterion(161) != oracle::x2_minus_8y2(161, 10000));

  int disagreements = 0;
  for (long d = -499; d <= 499; d += 2) {
    disagreements += prime_residue_criterion(d) != oracle::x2_minus_8y2(d, 10000);
  }
  CHECK(disagreements == 72);
}

TEST_CASE("lagrange_descent examples") {
  const DescentTrace t89 = lagrange_descent(89);
  CHECK(t89.p == 89);
  CHECK(t89.steps == std::vector<DescentStep>{{39, 17}, {5, 1}});
  const QuadInt u89 = reconstruct(t89);
  CHECK(u89.norm() == 89);
  CHECK(abs(u89.b) == 4);

  CHECK(lagrange_descent(17).steps == std::vector<DescentStep>{{5, 1}});

  const DescentTrace t73 = lagrange_descent(73);
  REQUIRE_FALSE(t73.steps.empty());
  CHECK(t73.steps.back().next_q == 1);
  CHECK(reconstruct(t73).norm() == 73);

  CHECK_THROWS_AS(lagrange_descent(7), std::invalid_argument);
  CHECK_THROWS_AS(lagrange_descent(15), std::invalid_argument);
  CHECK_THROWS_AS(lagrange_descent(2), std::invalid_argument);
}

TEST_CASE("descent reconstructs norm p for every prime p = 1 (mod 8) below 10^4") {
  int primes = 0;
  for (long p = 17; p < 10000; p += 8) {
    if (!oracle::is_prime(p)) continue;
    ++primes;
    const DescentTrace tr = lagrange_descent(p);
    REQUIRE_FALSE(tr.steps.empty());

    // z0 is the least root of z^2 = 8 below p/2.
    long z0 = 1;
    while ((z0 * z0 - 8) % p != 0) ++z0;
    CHECK(tr.steps.front().z == z0);
    CHECK(2 * z0 < p);

    // Each step satisfies z^2 - 8 = q_i q_{i+1}.
    BigInt q = p;
    for (const DescentStep& s : tr.steps) {
      CHECK(s.z * s.z - 8 == q * s.next_q);
      q = s.next_q;
    }
    CHECK(abs(q) <= 2);
    CHECK_MESSAGE(reconstruct(tr).norm() == p, "p = " << p);
  }
  CHECK(primes == 295);
}

TEST_CASE("solve_norm examples") {
  CHECK(solve_norm(17) == QuadInt{5, 2});
  CHECK(solve_norm(-17) == QuadInt{-1, 3});
  CHECK(solve_norm(89) == QuadInt{11, 4});
  CHECK(solve_norm(1) == QuadInt{1, 0});
  CHECK(solve_norm(-1) == QuadInt{-1, 1});
  CHECK_THROWS_AS(solve_norm(3), std::domain_error);
  CHECK_THROWS_AS(solve_norm(4), std::invalid_argument);
}

TEST_CASE("solve_norm hits the target norm for every solvable odd |D| <= 500") {
  for (long d = -499; d <= 499; d += 2) {
    if (!is_representable_R(d) && !is_representable_R(-d)) {
      CHECK_THROWS_AS(solve_norm(d), std::domain_error);
      continue;
    }
    const QuadInt u = solve_norm(d);
    CHECK_MESSAGE(u.norm() == d, "D = " << d);
    if (is_representable_R(d)) {
      CHECK(is_even(u.b));
      CHECK(u.a > 0);
      CHECK(u.b >= 0);
    }
  }
}

TEST_CASE("root_triple_for_difference examples") {
  CHECK(root_triple_for_difference(17) == T(45, 28, 53));
  CHECK(root_triple_for_difference(-17) == T(7, 24, 25));
  CHECK(root_triple_for_difference(89) == T(209, 120, 241));
  CHECK(root_triple_for_difference(-89) == T(51, 140, 149));
  CHECK(root_triple_for_difference(-1) == T(3, 4, 5));
  CHECK(root_triple_for_difference(7) == T(15, 8, 17));
  CHECK_THROWS_AS(root_triple_for_difference(4), std::invalid_argument);
  CHECK_THROWS_AS(root_triple_for_difference(3), std::domain_error);
  CHECK_THROWS_AS(root_triple_for_difference(9), std::domain_error);
  CHECK(difference_obstruction(17) == std::nullopt);
  CHECK(difference_obstruction(9).has_value());
}

TEST_CASE("root triples match the brute-force smallest hypotenuse for odd |D| <= 500") {
  // Every root for |D| <= 500 has N <= 2045, so a scan to 3000 is enough.
  const auto best = oracle::min_triple_by_difference(3000);
  for (long d = -499; d <= 499; d += 2) {
    const auto it = best.find(d);
    if (difference_obstruction(d)) {
      CHECK_MESSAGE(it == best.end(), "D = " << d);
      CHECK_THROWS_AS(root_triple_for_difference(d), std::domain_error);
      continue;
    }
    REQUIRE_MESSAGE(it != best.end(), "D = " << d);
    const PrimTriple root = root_triple_for_difference(d);
    CHECK_MESSAGE(root == T(it->second[0], it->second[1], it->second[2]), "D = " << d);
    CHECK(root.s() - root.c() == d);

    // No ancestor has the same S - C.
    for (auto up = parent(root); up; up = parent(up->first)) {
      CHECK(up->first.s() - up->first.c() != d);
    }
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(89) == std::vector<PrimePower>{{89, 1}});
  CHECK(factorize(1513) == std::vector<PrimePower>{{17, 1}, {89, 1}});
  CHECK(factorize(BigInt(1) << 20) == std::vector<PrimePower>{{2, 20}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);

  // Mersenne primes 2^31 - 1 and 2^61 - 1 defeat trial division.
  const BigInt p31 = (BigInt(1) << 31) - 1;
  const BigInt p61 = (BigInt(1) << 61) - 1;
  CHECK(factorize(p31 * p61 * p61 * 9) == std::vector<PrimePower>{{3, 2}, {p31, 1}, {p61, 2}});

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> dist(1, 2000000);
  for (int i = 0; i < 500; ++i) {
    const long n = dist(rng);
    BigInt prod = 1;
    BigInt last = 1;
    for (const PrimePower& pp : factorize(n)) {
      CHECK(oracle::is_prime(pp.prime.get_si()));
      CHECK(pp.prime > last);
      last = pp.prime;
      for (unsigned e = 0; e < pp.exponent; ++e) prod *= pp.prime;
    }
    CHECK(prod == n);
  }
}

TEST_CASE("is_prime and sqrt_mod_prime") {
  for (long n = 0; n < 10000; ++n) CHECK(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime((BigInt(1) << 89) - 1));
  CHECK_FALSE(is_prime(BigInt(3215031751L)));  // strong pseudoprime to bases 2, 3, 5, 7

  for (long p = 3; p < 2000; p += 2) {
    if (!oracle::is_prime(p)) continue;
    for (long a = 1; a < p && a < 40; ++a) {
      bool residue = false;
      for (long x = 1; x < p && !residue; ++x) residue = (x * x - a) % p == 0;
      if (residue) {
        const BigInt r = sqrt_mod_prime(a, p);
        CHECK(mod_ui(BigInt(r * r - a), static_cast<unsigned long>(p)) == 0);
      } else {
        CHECK_THROWS_AS(sqrt_mod_prime(a, p), std::domain_error);
      }
    }
  }
}

TEST_CASE("QuadInt arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int i = 0; i < 5000; ++i) {
    const QuadInt u{dist(rng), dist(rng)};
    const QuadInt v{dist(rng), dist(rng)};
    CHECK((u * v).norm() == u.norm() * v.norm());
    if (v.norm() != 0) {
      const auto q = exact_div(u * v, v);
      REQUIRE(q);
      CHECK(*q == u);
    }
  }
  CHECK(QuadInt::unit_pos().norm() == 1);
  CHECK(QuadInt::unit_neg_small().norm() == -1);
  CHECK(QuadInt::unit_pos() * QuadInt::unit_pos_inv() == QuadInt{1, 0});
  CHECK(pow(QuadInt::unit_neg(), 2) == QuadInt::unit_pos());
  CHECK_FALSE(exact_div(QuadInt{39, -2}, QuadInt{5, 2}).has_value());
  CHECK(format_quadint(QuadInt{29, -11}) == "29-11√2");
  CHECK(format_quadint(QuadInt{-1, 3}) == "-1+3√2");
  CHECK(format_quadint(QuadInt{11, 4}, true) == "11+4*sqrt2");
  CHECK(format_quadint(QuadInt{1, 0}) == "1+0√2");
}
