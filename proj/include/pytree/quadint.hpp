// Elements a + b*sqrt(2) of Z[sqrt(2)].
#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "pytree/bigint.hpp"

namespace pytree {

struct QuadInt {
  BigInt a, b;

  BigInt norm() const { return a * a - 2 * b * b; }
  QuadInt conj() const { return {a, -b}; }
  QuadInt operator-() const { return {-a, -b}; }

  // Sign of the real number a + b*sqrt(2).
  int real_sign() const;

  friend QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadInt& x, const QuadInt& y) { return x.a == y.a && x.b == y.b; }

  // 3 + 2*sqrt(2), the fundamental unit of norm +1, and its inverse.
  static QuadInt unit_pos() { return {3, 2}; }
  static QuadInt unit_pos_inv() { return {3, -2}; }
  // 1 + sqrt(2) and -1 + sqrt(2): norm -1; their product is -1.
  static QuadInt unit_neg() { return {1, 1}; }
  static QuadInt unit_neg_small() { return {-1, 1}; }
};

// x / y if it lies in Z[sqrt(2)]. Throws std::domain_error if y = 0.
std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y);

QuadInt pow(QuadInt base, unsigned e);

// "a+b√2" / "a-b√2"; with ascii = true, "a+b*sqrt2" / "a-b*sqrt2".
std::string format_quadint(const QuadInt& q, bool ascii = false);

std::ostream& operator<<(std::ostream& os, const QuadInt& q);

}  // namespace pytree
