#include "wreathfh/numeric.hpp"

namespace wfh {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return binomial_signed(BigInt(n), k);
}

BigInt binomial_signed(const BigInt& a, unsigned k) {
  BigInt num = 1;
  for (unsigned i = 0; i < k; ++i) num *= a - i;
  return num / factorial(k);
}

BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace wfh
