// Exact 2x2 integer matrices, the nilpotent cone and the conjugation action.
#pragma once

#include <ostream>

#include "pytree/bigint.hpp"

namespace pytree {

// Row-major (a b; c d).
struct IntMat2 {
  BigInt a, b, c, d;

  static IntMat2 identity() { return {1, 0, 0, 1}; }
  static IntMat2 zero() { return {0, 0, 0, 0}; }

  BigInt det() const { return a * d - b * c; }
  BigInt trace() const { return a + d; }
  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(d) == 0; }
  IntMat2 adjugate() const { return {d, -b, -c, a}; }
  IntMat2 transpose() const { return {a, c, b, d}; }
  IntMat2 scaled(const BigInt& k) const { return {k * a, k * b, k * c, k * d}; }

  friend bool operator==(const IntMat2& x, const IntMat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

IntMat2 mul(const IntMat2& x, const IntMat2& y);
inline IntMat2 operator*(const IntMat2& x, const IntMat2& y) { return mul(x, y); }

std::ostream& operator<<(std::ostream& os, const IntMat2& m);

// E = (0 -1; 0 0), the base point of the orbit.
inline IntMat2 e_matrix() { return {0, -1, 0, 0}; }
// D = (-1 0; 0 1); conjugation by D realizes delta.
inline IntMat2 d_matrix() { return {-1, 0, 0, 1}; }
// Swap matrix, sends E to its transpose.
inline IntMat2 swap_matrix() { return {0, 1, 1, 0}; }

// T X T^-1 with the inverse taken through the adjugate.
// Throws std::domain_error unless det(T) is +1 or -1.
IntMat2 conjugate(const IntMat2& t, const IntMat2& x);

// X^2 = 0, i.e. trace and determinant both vanish. The zero matrix counts.
bool is_nilpotent(const IntMat2& x);

// (x y; z -x) with y*z + x^2 = 0.
class NilpotentMat {
 public:
  // Throws std::invalid_argument if y*z + x^2 != 0.
  NilpotentMat(BigInt x, BigInt y, BigInt z);
  // Throws std::invalid_argument if m is not nilpotent.
  static NilpotentMat from_matrix(const IntMat2& m);

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }
  const BigInt& z() const { return z_; }
  IntMat2 matrix() const { return {x_, y_, z_, -x_}; }

 private:
  BigInt x_, y_, z_;
};

// X = sign * lambda * (mn  -n^2; m^2  -mn).
//
// lambda >= 0 is the content and the unique similarity invariant (X ~ lambda E
// over GL2(Z)). sign is +1 except for matrices on the negative sheet of the
// cone (z < 0 or y > 0), which need lambda E composed with -1. Normalization:
// m >= 0, and n > 0 when m = 0. The zero matrix maps to lambda = 0, (m, n) = (1, 0).
struct NilpotentDecomposition {
  BigInt lambda;
  BigInt m;
  BigInt n;
  int sign = 1;

  IntMat2 reconstruct() const;
  friend bool operator==(const NilpotentDecomposition&, const NilpotentDecomposition&) = default;
};

NilpotentDecomposition decompose(const NilpotentMat& x);

// Absolute triple read off a nilpotent matrix.
struct TripleCoords {
  BigInt s, c, n;
  friend bool operator==(const TripleCoords&, const TripleCoords&) = default;
};

std::ostream& operator<<(std::ostream& os, const TripleCoords& t);

// S = |T21 + T12|, C = |2 T11|, N = |T21 - T12|.
// Throws std::invalid_argument for non-nilpotent input.
TripleCoords triple_extract(const IntMat2& t);

}  // namespace pytree
