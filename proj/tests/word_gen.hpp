// Random alternating words for property tests.
#pragma once

#include <random>
#include <vector>

#include "pytree/gamma2_words.hpp"

namespace testgen {

// 1..max_depth syllables, exponents in [-max_exp, max_exp] \ {0}.
inline pytree::Gamma2Word random_word(std::mt19937_64& rng, int max_depth, int max_exp = 4) {
  using pytree::Generator;
  std::uniform_int_distribution<int> depth(1, max_depth);
  std::uniform_int_distribution<int> mag(1, max_exp);
  const int len = depth(rng);
  Generator g = (rng() & 1U) ? Generator::U : Generator::L;
  std::vector<pytree::Syllable> syl;
  for (int i = 0; i < len; ++i) {
    const int e = (rng() & 1U) ? mag(rng) : -mag(rng);
    syl.push_back({g, e});
    g = g == Generator::U ? Generator::L : Generator::U;
  }
  return pytree::Gamma2Word(std::move(syl));
}

// Same, but forced to end in an L syllable (a coset representative).
inline pytree::Gamma2Word random_coset_word(std::mt19937_64& rng, int max_depth, int max_exp = 4) {
  for (;;) {
    pytree::Gamma2Word w = random_word(rng, max_depth, max_exp);
    if (w.rightmost().gen == pytree::Generator::L) return w;
  }
}

}  // namespace testgen
