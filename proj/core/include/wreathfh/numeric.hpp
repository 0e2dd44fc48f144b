#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wfh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
/// Generalized binomial C(a, k) for any integer a and k >= 0.
BigInt binomial_signed(const BigInt& a, unsigned k);
BigInt ipow(const BigInt& base, unsigned exp);

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

std::string to_string(const BigInt& v);
std::string to_string(const Rational& q);

}  // namespace wfh
