// The rooted ternary tree of positive primitive Pythagorean triples.
//
// Every primitive triple (S odd, C even) appears exactly once. Children are
// produced by three affine maps (UMinus, LPlus, UPlus, in that left-to-right
// order), and the hypotenuse strictly increases along each edge, so any
// triple walks back to (3,4,5) in finitely many parent steps.
#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pytree/bigint.hpp"
#include "pytree/core_matrix.hpp"
#include "pytree/gamma2_words.hpp"

namespace pytree {

enum class ChildKind { UMinus = 0, LPlus = 1, UPlus = 2 };

inline constexpr std::array<ChildKind, 3> kChildOrder{ChildKind::UMinus, ChildKind::LPlus,
                                                       ChildKind::UPlus};

using TreePath = std::vector<ChildKind>;

// S^2 + C^2 = N^2, gcd(S, C) = 1, S odd and positive, C even and positive.
class PrimTriple {
 public:
  // Throws std::invalid_argument if the invariants fail.
  PrimTriple(BigInt s, BigInt c, BigInt n);
  explicit PrimTriple(const TripleCoords& t) : PrimTriple(t.s, t.c, t.n) {}

  static PrimTriple root() { return {3, 4, 5, Unchecked{}}; }
  static bool valid(const BigInt& s, const BigInt& c, const BigInt& n);

  const BigInt& s() const { return s_; }
  const BigInt& c() const { return c_; }
  const BigInt& n() const { return n_; }
  TripleCoords coords() const { return {s_, c_, n_}; }

  friend bool operator==(const PrimTriple& x, const PrimTriple& y) {
    return x.n_ == y.n_ && x.s_ == y.s_ && x.c_ == y.c_;
  }
  // Orders by hypotenuse, then S.
  friend bool operator<(const PrimTriple& x, const PrimTriple& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.s_ < y.s_;
  }

 private:
  struct Unchecked {};
  PrimTriple(BigInt s, BigInt c, BigInt n, Unchecked)
      : s_(std::move(s)), c_(std::move(c)), n_(std::move(n)) {}
  friend PrimTriple child(const PrimTriple& t, ChildKind k);

  BigInt s_, c_, n_;
};

std::ostream& operator<<(std::ostream& os, const PrimTriple& t);

// m > n >= 1, gcd(m, n) = 1, m + n odd.
class ParamPair {
 public:
  // Throws std::invalid_argument if the invariants fail.
  ParamPair(BigInt m, BigInt n);
  static bool valid(const BigInt& m, const BigInt& n);

  const BigInt& m() const { return m_; }
  const BigInt& n() const { return n_; }
  friend bool operator==(const ParamPair&, const ParamPair&) = default;

 private:
  BigInt m_, n_;
};

// (m^2 - n^2, 2mn, m^2 + n^2)
PrimTriple triple_from_params(const ParamPair& p);
// m = sqrt((N+S)/2), n = sqrt((N-S)/2). Always succeeds for a valid PrimTriple;
// throws std::logic_error if the radicands are not squares.
ParamPair params_from_triple(const PrimTriple& t);

//   UMinus: [-S,  C, N] + 2(N + S - C)[1,1,1]    (m,n) -> (2m - n, m)
//   LPlus:  [ S, -C, N] + 2(N - S + C)[1,1,1]    (m,n) -> (m + 2n, n)
//   UPlus:  [-S, -C, N] + 2(N + S + C)[1,1,1]    (m,n) -> (2m + n, m)
PrimTriple child(const PrimTriple& t, ChildKind k);
std::array<PrimTriple, 3> children(const PrimTriple& t);

// nullopt exactly at the root.
std::optional<std::pair<PrimTriple, ChildKind>> parent(const PrimTriple& t);

PrimTriple node_at(std::span<const ChildKind> path);
TreePath locate(const PrimTriple& t);

// Streams level k in path-lexicographic order (UMinus < LPlus < UPlus).
// Holds one root-to-leaf chain, so memory is O(k). Copying forks the traversal.
class LevelIterator {
 public:
  explicit LevelIterator(std::size_t level);

  // Next triple, or nullopt once all 3^k have been produced.
  std::optional<PrimTriple> next();
  // Path of the triple most recently returned by next().
  const TreePath& path() const { return path_; }
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
  bool started_ = false;
  bool done_ = false;
  TreePath path_;
  std::vector<PrimTriple> chain_;  // chain_[i] is the node at depth i along path_
};

inline LevelIterator level_iter(std::size_t k) { return LevelIterator(k); }

// Coset word whose conjugation of E lands on node_at(path). The root is [L^2];
// each step prepends one Gamma(2) generator, picked from the current first
// column of the word's matrix.
Gamma2Word word_for(std::span<const ChildKind> path);

// "U-", "L+", "U+"
std::string_view kind_name(ChildKind k);
// Comma-separated kind names; the root path is "".
std::string format_path(std::span<const ChildKind> path);
// Accepts format_path output, or a compact string over '-', '0', '+'
// (optionally comma-separated). Throws std::invalid_argument otherwise.
TreePath parse_path(std::string_view text);

}  // namespace pytree
