#include "wreathfh/quadfield.hpp"

#include <sstream>

#include "wreathfh/error.hpp"

namespace wfh {

QuadFieldElem::QuadFieldElem(Rational a, Rational b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) throw Error(Errc::Precondition, "negative radicand");
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  } else if (d_ == 0) {
    b_ = 0;
  }
}

namespace {

int common_d(const QuadFieldElem& x, const QuadFieldElem& y) {
  // Pure rationals mix freely with any field.
  if (x.b() == 0 && y.b() == 0) return std::max(x.d(), y.d());
  if (x.b() == 0) return y.d();
  if (y.b() == 0) return x.d();
  if (x.d() != y.d())
    throw Error(Errc::Precondition, "mixing Q(sqrt " + std::to_string(x.d()) +
                                        ") with Q(sqrt " + std::to_string(y.d()) + ")");
  return x.d();
}

}  // namespace

QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, common_d(x, y)};
}

QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, common_d(x, y)};
}

QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) {
  int d = common_d(x, y);
  return {x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d};
}

std::strong_ordering operator<=>(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadFieldElem::str() const {
  std::ostringstream os;
  os << a_;
  if (b_ != 0) os << (b_ > 0 ? "+" : "") << b_ << "*sqrt(" << d_ << ")";
  return os.str();
}

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

std::strong_ordering operator<=>(const Quaternion& p, const Quaternion& q) {
  if (auto c = p.w <=> q.w; c != 0) return c;
  if (auto c = p.x <=> q.x; c != 0) return c;
  if (auto c = p.y <=> q.y; c != 0) return c;
  return p.z <=> q.z;
}

std::string Quaternion::str() const {
  return "(" + w.str() + ", " + x.str() + ", " + y.str() + ", " + z.str() + ")";
}

}  // namespace wfh
