#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const Int& x) { return x.sign(); }
inline int sign_of(const Rat& x) { return x.sign(); }

// Exact value of a decimal literal such as "-0.25" or "3.14159" or "7".
// Scientific notation is accepted ("1e-3").  Throws on anything else.
Rat rat_from_decimal(const std::string& text);

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct size_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace maw
