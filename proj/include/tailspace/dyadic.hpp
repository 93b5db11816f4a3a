#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace tailspace {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binary rational num / 2^exp.  Kept normalized: exp >= 0, and exp == 0
/// whenever num is even or zero.  All arithmetic and comparisons are exact;
/// this is the type behind every quantity the build certifies "exactly"
/// (means, probabilities, coefficient counts).
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(long long n) : num_(n), exp_(0) {}  // NOLINT: implicit on purpose
  Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}

  // num / 2^pow2
  static Dyadic ratio(BigInt num, int pow2) {
    Dyadic d;
    d.num_ = std::move(num);
    d.exp_ = pow2;
    d.normalize();
    return d;
  }
  static Dyadic one_over_pow2(int k) { return ratio(1, k); }

  const BigInt& numerator() const { return num_; }
  int exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Dyadic operator-() const { return ratio(-num_, exp_); }

  Dyadic& operator+=(const Dyadic& o) {
    const int e = std::max(exp_, o.exp_);
    num_ = (num_ << (e - exp_)) + (o.num_ << (e - o.exp_));
    exp_ = e;
    normalize();
    return *this;
  }
  Dyadic& operator-=(const Dyadic& o) { return *this += -o; }
  Dyadic& operator*=(const Dyadic& o) {
    num_ *= o.num_;
    exp_ += o.exp_;
    normalize();
    return *this;
  }

  friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }
  friend Dyadic operator-(Dyadic a, const Dyadic& b) { return a -= b; }
  friend Dyadic operator*(Dyadic a, const Dyadic& b) { return a *= b; }

  Dyadic pow(unsigned k) const {
    Dyadic r(1), base(*this);
    while (k) {
      if (k & 1u) r *= base;
      base *= base;
      k >>= 1u;
    }
    return r;
  }

  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    const int e = std::max(a.exp_, b.exp_);
    return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
  }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

  double to_double() const {
    return std::ldexp(num_.convert_to<double>(), -exp_);
  }

  /// "num" for integers, "num/den" with den = 2^exp otherwise (e.g. "3/32").
  std::string to_string() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/" + (BigInt(1) << exp_).str();
  }

  /// Parses the to_string() format; the denominator must be a power of two.
  static std::optional<Dyadic> parse(const std::string& s);

  friend std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.to_string();
  }

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp_;
    }
  }

  BigInt num_;
  int exp_;
};

}  // namespace tailspace
