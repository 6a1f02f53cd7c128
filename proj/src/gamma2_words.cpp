#include "pytree/gamma2_words.hpp"

#include <stdexcept>

namespace pytree {

namespace {

bool is_alternating(std::span<const Syllable> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].exp == 0) return false;
    if (i > 0 && s[i].gen == s[i - 1].gen) return false;
  }
  return true;
}

}  // namespace

Gamma2Word::Gamma2Word(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  if (!is_alternating(syllables_)) {
    throw std::invalid_argument("Gamma2Word: syllables are not in alternating normal form");
  }
}

Gamma2Word normalize(std::span<const Syllable> raw) {
  // Stack reduction: a zero exponent after merging exposes the previous
  // syllable to the next merge.
  std::vector<Syllable> out;
  out.reserve(raw.size());
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (!out.empty() && out.back().gen == s.gen) {
      std::int64_t sum = 0;
      if (__builtin_add_overflow(out.back().exp, s.exp, &sum)) {
        throw std::overflow_error("normalize: exponent overflow");
      }
      if (sum == 0) {
        out.pop_back();
      } else {
        out.back().exp = sum;
      }
    } else {
      out.push_back(s);
    }
  }
  return Gamma2Word(std::move(out));
}

Gamma2Word concat(const Gamma2Word& lhs, const Gamma2Word& rhs) {
  std::vector<Syllable> raw(lhs.syllables().begin(), lhs.syllables().end());
  raw.insert(raw.end(), rhs.syllables().begin(), rhs.syllables().end());
  return normalize(raw);
}

Gamma2Word prepend(const Syllable& s, const Gamma2Word& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.size() + 1);
  raw.push_back(s);
  raw.insert(raw.end(), w.syllables().begin(), w.syllables().end());
  return normalize(raw);
}

IntMat2 generator_power(Generator g, std::int64_t k) {
  const BigInt twice = BigInt(static_cast<signed long>(k)) * 2;
  if (g == Generator::U) return {1, twice, 0, 1};
  return {1, 0, twice, 1};
}

IntMat2 evaluate(const Gamma2Word& w) {
  IntMat2 acc = IntMat2::identity();
  for (const Syllable& s : w.syllables()) acc = acc * generator_power(s.gen, s.exp);
  return acc;
}

Gamma2Word delta(const Gamma2Word& w) {
  std::vector<Syllable> out(w.syllables().begin(), w.syllables().end());
  for (Syllable& s : out) {
    if (s.exp == INT64_MIN) throw std::overflow_error("delta: exponent overflow");
    s.exp = -s.exp;
  }
  return Gamma2Word(std::move(out));
}

std::vector<Gamma2Word> CosetLevel::words() const {
  std::vector<Gamma2Word> all;
  all.reserve(size());
  for (const auto* fam : {&l_plus, &l_minus, &u_plus, &u_minus}) {
    all.insert(all.end(), fam->begin(), fam->end());
  }
  return all;
}

CosetLevel next_coset_level(const CosetLevel& prev) {
  CosetLevel next;
  next.level = prev.level + 1;
  auto extend = [](std::vector<Gamma2Word>& dst, Syllable s, const std::vector<Gamma2Word>& src) {
    for (const Gamma2Word& w : src) dst.push_back(prepend(s, w));
  };
  const Syllable lp{Generator::L, 1}, lm{Generator::L, -1};
  const Syllable up{Generator::U, 1}, um{Generator::U, -1};

  extend(next.l_plus, lp, prev.l_plus);
  extend(next.l_plus, lp, prev.u_plus);
  extend(next.l_plus, lp, prev.u_minus);

  extend(next.l_minus, lm, prev.l_minus);
  extend(next.l_minus, lm, prev.u_plus);
  extend(next.l_minus, lm, prev.u_minus);

  extend(next.u_plus, up, prev.u_plus);
  extend(next.u_plus, up, prev.l_plus);
  extend(next.u_plus, up, prev.l_minus);

  extend(next.u_minus, um, prev.u_minus);
  extend(next.u_minus, um, prev.l_plus);
  extend(next.u_minus, um, prev.l_minus);
  return next;
}

CosetLevel coset_level(std::size_t i) {
  CosetLevel lvl;
  lvl.l_plus.push_back(Gamma2Word({{Generator::L, 1}}));
  for (std::size_t k = 0; k < i; ++k) lvl = next_coset_level(lvl);
  return lvl;
}

TripleCoords word_to_triple(const Gamma2Word& w) {
  if (w.empty() || w.rightmost().gen != Generator::L) {
    throw std::invalid_argument("word_to_triple: word must end in an L syllable");
  }
  return triple_extract(conjugate(evaluate(w), e_matrix()));
}

std::string format_word(const Gamma2Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ',';
    out += static_cast<char>(s.gen);
    out += '^';
    out += to_string(BigInt(static_cast<signed long>(s.exp)) * 2);
  }
  return out;
}

Gamma2Word parse_word(std::string_view text) {
  if (text == "e") return {};
  std::vector<Syllable> syllables;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (tok.size() < 3 || (tok[0] != 'U' && tok[0] != 'L') || tok[1] != '^') {
      throw std::invalid_argument("parse_word: bad token '" + std::string(tok) + "'");
    }
    // parse_bigint enforces canonical digits; int64 range is checked after.
    const BigInt e = parse_bigint(tok.substr(2));
    if (sgn(e) == 0 || is_odd(e) || !e.fits_slong_p()) {
      throw std::invalid_argument("parse_word: exponent must be a nonzero even integer in '" +
                                  std::string(tok) + "'");
    }
    syllables.push_back({static_cast<Generator>(tok[0]), e.get_si() / 2});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Gamma2Word(std::move(syllables));
}

}  // namespace pytree
