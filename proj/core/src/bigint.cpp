#include "rklat/bigint.hpp"

#include "rklat/errors.hpp"

#include <cctype>

namespace rklat {

BigInt ipow(unsigned base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

BigInt binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (n - r < r) r = n - r;
  BigInt acc = 1;
  for (unsigned i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;  // exact: acc is C(n-r+i, i) after this step
  }
  return acc;
}

BigInt parse_decimal(std::string_view text) {
  if (text.empty()) throw parse_error("empty decimal number");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error("not a decimal number: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text));
}

}  // namespace rklat
