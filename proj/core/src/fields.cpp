#include "maw/fields.hpp"

namespace maw {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  // extended euclid on (a, p)
  long long old_r = a, r = p_, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tr = old_r - q * r;
    old_r = r;
    r = tr;
    long long ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  return from_int(old_s);
}

}  // namespace maw
