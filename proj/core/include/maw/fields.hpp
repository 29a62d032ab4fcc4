#pragma once

#include <string>

#include "maw/numbers.hpp"

namespace maw {

// Coefficient selection: p == 0 means Q, otherwise the prime field F_p.
struct FieldSpec {
  long long p = 0;

  bool is_rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
  bool operator==(const FieldSpec&) const = default;
};

bool is_prime(long long p);

inline FieldSpec validate_field(long long p) {
  if (p == 0) return FieldSpec{0};
  if (p < 2 || !is_prime(p)) throw input_error("field must be 0 (rationals) or a prime");
  return FieldSpec{p};
}

struct RationalField {
  using Elem = Rat;
  static constexpr bool rational = true;

  FieldSpec spec() const { return FieldSpec{0}; }
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& x) const { return x == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  Elem from_int(long long v) const { return Rat(v); }
  Elem from_big(const Int& v) const { return Rat(v); }
  std::string to_string(const Elem& x) const { return x.str(); }
};

// Runs fn with a concrete field instance; both instantiations must return the
// same type.
template <class Fn>
decltype(auto) dispatch_field(FieldSpec spec, Fn&& fn);

class PrimeField {
 public:
  using Elem = long long;  // normalized to 0..p-1
  static constexpr bool rational = false;

  explicit PrimeField(long long p) : p_(p) {
    if (p < 2 || !is_prime(p)) throw input_error("not a prime modulus");
  }

  FieldSpec spec() const { return FieldSpec{p_}; }
  long long modulus() const { return p_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(Elem x) const { return x == 0; }
  Elem add(Elem a, Elem b) const {
    Elem r = a + b;
    return r >= p_ ? r - p_ : r;
  }
  Elem sub(Elem a, Elem b) const {
    Elem r = a - b;
    return r < 0 ? r + p_ : r;
  }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<__int128>(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem from_int(long long v) const {
    Elem r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  Elem from_big(const Int& v) const {
    Int r = v % p_;
    if (r < 0) r += p_;
    return static_cast<long long>(r);
  }
  std::string to_string(Elem x) const { return std::to_string(x); }

 private:
  long long p_;
};

template <class Fn>
decltype(auto) dispatch_field(FieldSpec spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

}  // namespace maw
