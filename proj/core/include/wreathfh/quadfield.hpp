#pragma once

#include <compare>
#include <string>

#include "wreathfh/numeric.hpp"

namespace wfh {

/// a + b*sqrt(d) with rational a, b and square-free d >= 0. For d in {0, 1}
/// the element is plain rational and b is kept at zero.
class QuadFieldElem {
 public:
  QuadFieldElem() = default;
  QuadFieldElem(Rational a, Rational b, int d);
  static QuadFieldElem rational(Rational a, int d) { return {std::move(a), 0, d}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  int d() const noexcept { return d_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadFieldElem operator-() const { return {-a_, -b_, d_}; }
  friend QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y);
  friend QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y);
  friend QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y);

  friend bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QuadFieldElem& x, const QuadFieldElem& y);

  std::string str() const;

 private:
  Rational a_{0};
  Rational b_{0};
  int d_ = 1;
};

struct Quaternion {
  QuadFieldElem w, x, y, z;

  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  QuadFieldElem norm() const { return w * w + x * x + y * y + z * z; }

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
  friend std::strong_ordering operator<=>(const Quaternion& p, const Quaternion& q);

  std::string str() const;
};

}  // namespace wfh
