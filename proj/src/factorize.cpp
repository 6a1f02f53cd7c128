#include "pytree/factorize.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace pytree {

namespace {

constexpr std::array<unsigned long, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr unsigned long kTrialLimit = 10000;

BigInt powm(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n.
BigInt rho_factor(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Largest k with n = r^k; sets root. Rho is hopeless on prime powers.
unsigned perfect_power(const BigInt& n, BigInt& root) {
  const auto bits = static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  for (unsigned long k = bits; k >= 2; --k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) return static_cast<unsigned>(k);
  }
  root = n;
  return 1;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& acc, unsigned mult = 1) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n] += mult;
    return;
  }
  BigInt root;
  if (const unsigned k = perfect_power(n, root); k > 1) {
    split(root, acc, mult * k);
    return;
  }
  const BigInt d = rho_factor(n);
  split(d, acc, mult);
  split(BigInt(n / d), acc, mult);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (is_even(d)) {
    d /= 2;
    ++s;
  }
  const BigInt nm1 = n - 1;
  for (unsigned long a : kWitnesses) {
    BigInt x = powm(a, d, n);
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s && witness; ++i) {
      x = (x * x) % n;
      if (x == nm1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::map<BigInt, unsigned> acc;
  BigInt rest = n;
  for (unsigned long p = 2; p <= kTrialLimit && BigInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      rest /= p;
      ++acc[BigInt(p)];
    }
  }
  if (rest > 1) {
    if (rest < BigInt(kTrialLimit) * kTrialLimit) {
      ++acc[rest];
    } else {
      split(rest, acc);
    }
  }
  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (const auto& [p, e] : acc) out.push_back({p, e});
  return out;
}

BigInt sqrt_mod_prime(const BigInt& a_in, const BigInt& p) {
  BigInt a = a_in % p;
  if (sgn(a) < 0) a += p;
  if (sgn(a) == 0) return 0;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) {
    throw std::domain_error("sqrt_mod_prime: " + to_string(a_in) + " is not a square mod " + to_string(p));
  }
  // p - 1 = q * 2^s with q odd
  BigInt q = p - 1;
  unsigned long s = 0;
  while (is_even(q)) {
    q /= 2;
    ++s;
  }
  if (s == 1) return powm(a, BigInt((p + 1) / 4), p);

  BigInt z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  BigInt c = powm(z, q, p);
  BigInt r = powm(a, BigInt((q + 1) / 2), p);
  BigInt t = powm(a, q, p);
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt t2 = t;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    r = (r * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return r;
}

}  // namespace pytree
