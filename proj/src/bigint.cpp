#include "pytree/bigint.hpp"

#include <stdexcept>

namespace pytree {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  bool ok = !digits.empty() && (digits.size() == 1 || digits.front() != '0');
  for (char ch : digits) ok = ok && ch >= '0' && ch <= '9';
  if (!ok || text == "-0") throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  return BigInt(std::string(text), 10);
}

}  // namespace pytree
