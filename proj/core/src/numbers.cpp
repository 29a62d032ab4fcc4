#include "maw/numbers.hpp"

#include <cctype>
#include <cstdlib>

namespace maw {

Rat rat_from_decimal(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&]() -> Rat { throw input_error("not a decimal literal: '" + text + "'"); };
  if (n == 0) return fail();
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  bool any = false;
  for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
    digits += text[i];
    any = true;
  }
  if (i < n && text[i] == '.') {
    ++i;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      digits += text[i];
      ++frac_digits;
      any = true;
    }
  }
  if (!any) return fail();
  long exp10 = 0;
  if (i < n && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= n) return fail();
    long v = 0;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000000) return fail();
    }
    exp10 = eneg ? -v : v;
  }
  if (i != n) return fail();

  // cpp_int's string constructor treats a leading zero as an octal prefix
  const std::size_t nz = digits.find_first_not_of('0');
  Int num(nz == std::string::npos ? "0" : digits.substr(nz));
  if (neg) num = -num;
  long shift = exp10 - frac_digits;
  Int den = 1;
  if (shift >= 0) {
    for (long k = 0; k < shift; ++k) num *= 10;
  } else {
    for (long k = 0; k < -shift; ++k) den *= 10;
  }
  return Rat(num, den);
}

}  // namespace maw
