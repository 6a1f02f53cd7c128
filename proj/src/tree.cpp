#include "pytree/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace pytree {

bool PrimTriple::valid(const BigInt& s, const BigInt& c, const BigInt& n) {
  if (sgn(s) <= 0 || sgn(c) <= 0 || sgn(n) <= 0) return false;
  if (!is_odd(s) || !is_even(c)) return false;
  if (s * s + c * c != n * n) return false;
  return gcd(s, c) == 1;
}

PrimTriple::PrimTriple(BigInt s, BigInt c, BigInt n)
    : s_(std::move(s)), c_(std::move(c)), n_(std::move(n)) {
  if (!valid(s_, c_, n_)) {
    throw std::invalid_argument("not a primitive triple with S odd, C even: (" + to_string(s_) +
                                "," + to_string(c_) + "," + to_string(n_) + ")");
  }
}

std::ostream& operator<<(std::ostream& os, const PrimTriple& t) {
  return os << '(' << t.s() << ',' << t.c() << ',' << t.n() << ')';
}

bool ParamPair::valid(const BigInt& m, const BigInt& n) {
  return sgn(n) > 0 && m > n && is_odd(m + n) && gcd(m, n) == 1;
}

ParamPair::ParamPair(BigInt m, BigInt n) : m_(std::move(m)), n_(std::move(n)) {
  if (!valid(m_, n_)) {
    throw std::invalid_argument("not a parameter pair (m > n >= 1, coprime, opposite parity): (" +
                                to_string(m_) + "," + to_string(n_) + ")");
  }
}

PrimTriple triple_from_params(const ParamPair& p) {
  const BigInt mm = p.m() * p.m();
  const BigInt nn = p.n() * p.n();
  return PrimTriple(mm - nn, 2 * p.m() * p.n(), mm + nn);
}

ParamPair params_from_triple(const PrimTriple& t) {
  auto m = exact_sqrt((t.n() + t.s()) / 2);
  auto n = exact_sqrt((t.n() - t.s()) / 2);
  if (!m || !n) throw std::logic_error("params_from_triple: radicands are not perfect squares");
  return ParamPair(*m, *n);
}

PrimTriple child(const PrimTriple& t, ChildKind k) {
  const BigInt& s = t.s();
  const BigInt& c = t.c();
  const BigInt& n = t.n();
  switch (k) {
    case ChildKind::UMinus: {
      const BigInt shift = 2 * (n + s - c);
      return {shift - s, c + shift, n + shift, PrimTriple::Unchecked{}};
    }
    case ChildKind::LPlus: {
      const BigInt shift = 2 * (n - s + c);
      return {s + shift, shift - c, n + shift, PrimTriple::Unchecked{}};
    }
    case ChildKind::UPlus: {
      const BigInt shift = 2 * (n + s + c);
      return {shift - s, shift - c, n + shift, PrimTriple::Unchecked{}};
    }
  }
  throw std::logic_error("child: bad kind");
}

std::array<PrimTriple, 3> children(const PrimTriple& t) {
  return {child(t, ChildKind::UMinus), child(t, ChildKind::LPlus), child(t, ChildKind::UPlus)};
}

std::optional<std::pair<PrimTriple, ChildKind>> parent(const PrimTriple& t) {
  const ParamPair p = params_from_triple(t);
  const BigInt& m = p.m();
  const BigInt& n = p.n();
  // Inverses of the three parameter actions; exactly one is a valid pair
  // unless t is the root.
  const std::array<std::pair<std::pair<BigInt, BigInt>, ChildKind>, 3> candidates{{
      {{n, 2 * n - m}, ChildKind::UMinus},
      {{m - 2 * n, n}, ChildKind::LPlus},
      {{n, m - 2 * n}, ChildKind::UPlus},
  }};
  for (const auto& [mn, kind] : candidates) {
    if (ParamPair::valid(mn.first, mn.second)) {
      return std::make_pair(triple_from_params(ParamPair(mn.first, mn.second)), kind);
    }
  }
  return std::nullopt;
}

PrimTriple node_at(std::span<const ChildKind> path) {
  PrimTriple t = PrimTriple::root();
  for (ChildKind k : path) t = child(t, k);
  return t;
}

TreePath locate(const PrimTriple& t) {
  TreePath path;
  PrimTriple cur = t;
  while (auto up = parent(cur)) {
    path.push_back(up->second);
    cur = std::move(up->first);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

LevelIterator::LevelIterator(std::size_t level) : level_(level) {
  path_.reserve(level);
  chain_.reserve(level + 1);
}

std::optional<PrimTriple> LevelIterator::next() {
  if (done_) return std::nullopt;
  std::size_t refill_from = 0;
  if (!started_) {
    started_ = true;
    chain_.assign(1, PrimTriple::root());
  } else {
    // Odometer step: bump the deepest digit that is not yet UPlus.
    std::size_t j = level_;
    while (j > 0 && path_[j - 1] == ChildKind::UPlus) --j;
    if (j == 0) {
      done_ = true;
      return std::nullopt;
    }
    --j;
    path_[j] = static_cast<ChildKind>(static_cast<int>(path_[j]) + 1);
    path_.resize(j + 1);
    chain_.erase(chain_.begin() + static_cast<std::ptrdiff_t>(j + 1), chain_.end());
    chain_.push_back(child(chain_[j], path_[j]));
    refill_from = j + 1;
  }
  for (std::size_t i = refill_from; i < level_; ++i) {
    path_.push_back(ChildKind::UMinus);
    chain_.push_back(child(chain_.back(), ChildKind::UMinus));
  }
  return chain_.back();
}

Gamma2Word word_for(std::span<const ChildKind> path) {
  Gamma2Word w({{Generator::L, 1}});
  // First column (top, bottom) of evaluate(w); the node's parameters are
  // {|top|, |bottom|}. U^(2t) adds 2t*bottom to top, L^(2t) adds 2t*top to bottom.
  BigInt top = 1, bottom = 2;
  for (ChildKind k : path) {
    const bool bottom_larger = abs(bottom) > abs(top);
    const BigInt& larger = bottom_larger ? bottom : top;
    const BigInt& smaller = bottom_larger ? top : bottom;
    const int same = sgn(larger) * sgn(smaller);

    Generator gen;
    int t;
    if (k == ChildKind::LPlus) {
      // larger += 2*smaller in the growing direction
      gen = bottom_larger ? Generator::L : Generator::U;
      t = same;
    } else {
      // smaller += +-2*larger; UPlus grows to 2m+n, UMinus to 2m-n
      gen = bottom_larger ? Generator::U : Generator::L;
      t = k == ChildKind::UPlus ? same : -same;
    }
    if (gen == Generator::U) {
      top += 2 * t * bottom;
    } else {
      bottom += 2 * t * top;
    }
    w = prepend({gen, t}, w);
  }
  return w;
}

std::string_view kind_name(ChildKind k) {
  switch (k) {
    case ChildKind::UMinus: return "U-";
    case ChildKind::LPlus: return "L+";
    case ChildKind::UPlus: return "U+";
  }
  return "?";
}

std::string format_path(std::span<const ChildKind> path) {
  std::string out;
  for (ChildKind k : path) {
    if (!out.empty()) out += ',';
    out += kind_name(k);
  }
  return out;
}

TreePath parse_path(std::string_view text) {
  TreePath path;
  if (text.empty()) return path;
  const bool named = text.find_first_of("UL") != std::string_view::npos;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    if (named) {
      if (tok == "U-") path.push_back(ChildKind::UMinus);
      else if (tok == "L+") path.push_back(ChildKind::LPlus);
      else if (tok == "U+") path.push_back(ChildKind::UPlus);
      else throw std::invalid_argument("parse_path: bad step '" + std::string(tok) + "'");
    } else {
      if (tok.empty()) throw std::invalid_argument("parse_path: empty step");
      for (char ch : tok) {
        if (ch == '-') path.push_back(ChildKind::UMinus);
        else if (ch == '0') path.push_back(ChildKind::LPlus);
        else if (ch == '+') path.push_back(ChildKind::UPlus);
        else throw std::invalid_argument("parse_path: bad step '" + std::string(1, ch) + "'");
      }
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return path;
}

}  // namespace pytree
