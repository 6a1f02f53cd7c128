// Words in the free product Gamma(2) = <U^2> * <L^2>.
//
// A syllable (g, k) stands for the matrix g^(2k); exponents are stored halved so
// that the alternation rule is stated in terms of the Gamma(2) generators. The
// leftmost syllable is applied last, matching the left-extension used by the
// coset enumeration.
#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pytree/core_matrix.hpp"

namespace pytree {

enum class Generator : char { U = 'U', L = 'L' };

struct Syllable {
  Generator gen;
  std::int64_t exp;  // nonzero; matrix exponent is 2*exp

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

class Gamma2Word {
 public:
  Gamma2Word() = default;
  // Syllables must already be in alternating normal form with nonzero
  // exponents; throws std::invalid_argument otherwise. Use normalize() for raw input.
  explicit Gamma2Word(std::vector<Syllable> syllables);

  std::span<const Syllable> syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  const Syllable& leftmost() const { return syllables_.front(); }
  const Syllable& rightmost() const { return syllables_.back(); }

  friend auto operator<=>(const Gamma2Word&, const Gamma2Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// Merge adjacent equal generators and drop zero exponents until alternating.
// Throws std::overflow_error if a merged exponent leaves int64.
Gamma2Word normalize(std::span<const Syllable> raw);

// normalize(lhs ++ rhs)
Gamma2Word concat(const Gamma2Word& lhs, const Gamma2Word& rhs);
// normalize([s] ++ w)
Gamma2Word prepend(const Syllable& s, const Gamma2Word& w);

// U^(2k) = (1 2k; 0 1), L^(2k) = (1 0; 2k 1).
IntMat2 generator_power(Generator g, std::int64_t k);

IntMat2 evaluate(const Gamma2Word& w);

// The outer automorphism U^2 -> U^-2, L^2 -> L^-2 (conjugation by D).
Gamma2Word delta(const Gamma2Word& w);

// The four families of coset representatives at one level of the enumeration,
// named by the leftmost syllable's generator and exponent sign.
struct CosetLevel {
  std::size_t level = 0;
  std::vector<Gamma2Word> l_plus, l_minus, u_plus, u_minus;

  std::size_t size() const { return l_plus.size() + l_minus.size() + u_plus.size() + u_minus.size(); }
  // Families concatenated in the order L+, L-, U+, U-.
  std::vector<Gamma2Word> words() const;
};

CosetLevel coset_level(std::size_t i);
CosetLevel next_coset_level(const CosetLevel& prev);

// Conjugate E by evaluate(w) and read off the triple. Throws
// std::invalid_argument unless w ends in an L syllable.
TripleCoords word_to_triple(const Gamma2Word& w);

// "U^-2,L^2" with matrix exponents; the empty word is "e".
std::string format_word(const Gamma2Word& w);
// Inverse of format_word. Only canonical text is accepted (even nonzero
// exponents, no leading zeros or '+', alternating generators); anything else
// throws std::invalid_argument.
Gamma2Word parse_word(std::string_view text);

}  // namespace pytree
