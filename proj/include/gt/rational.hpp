#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gt {

// Exact rational over int64. Every threshold comparison in this library is
// integer cross-multiplication; no floating point decides a verdict.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  // Accepts "a/b", integers and plain decimals ("0.75" -> 3/4).
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational operator-() const { return Rational(-num_, den_, NoReduce{}); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  using i128 = __int128;
  struct NoReduce {};
  Rational(std::int64_t n, std::int64_t d, NoReduce) : num_(n), den_(d) {}

  static Rational make(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num > INT64_MAX || num < INT64_MIN || den > INT64_MAX)
      throw std::overflow_error("Rational: value out of range");
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den), NoReduce{});
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Threshold of the form rho^(1/root). The regularity lemmas compare against
// eps^(1/2), eps^(1/6), eps^(1/10); all of these are decided exactly by
// raising both sides to the root power (|x| <= rho^(1/root) iff
// |x|^root <= rho for rho >= 0). A double prefilter skips the bignum path
// away from the boundary.
class Tolerance {
 public:
  Tolerance(Rational value) : rho_(value), root_(1) {
    if (value.is_negative()) throw std::invalid_argument("Tolerance: negative");
  }
  Tolerance(std::int64_t value) : Tolerance(Rational(value)) {}

  static Tolerance nth_root(Rational rho, unsigned root) {
    if (rho.is_negative()) throw std::invalid_argument("Tolerance: negative radicand");
    if (root == 0) throw std::invalid_argument("Tolerance: zero root");
    Tolerance t{rho};
    t.root_ = root;
    return t;
  }

  const Rational& rho() const { return rho_; }
  unsigned root() const { return root_; }
  double to_double() const { return std::pow(rho_.to_double(), 1.0 / root_); }

  // |x| <= rho^(1/root)
  bool admits_abs(const Rational& x) const {
    Rational a = x.abs();
    if (root_ == 1) return a <= rho_;
    double lhs = a.to_double();
    double rhs = to_double();
    if (lhs < rhs * (1.0 - 1e-9)) return true;
    if (lhs > rhs * (1.0 + 1e-9) && rhs > 0) return false;
    return pow_le(a, rho_, root_);
  }

  // x >= rho^(1/root) for x >= 0
  bool at_least(const Rational& x) const {
    if (x.is_negative()) return false;
    if (root_ == 1) return x >= rho_;
    return !pow_lt(x, rho_, root_);
  }

  std::string str() const {
    if (root_ == 1) return rho_.str();
    return "(" + rho_.str() + ")^(1/" + std::to_string(root_) + ")";
  }

 private:
  using BigInt = boost::multiprecision::cpp_int;

  // a^root <= rho, a >= 0
  static bool pow_le(const Rational& a, const Rational& rho, unsigned root) {
    BigInt lhs = boost::multiprecision::pow(BigInt(a.num()), root) * BigInt(rho.den());
    BigInt rhs = BigInt(rho.num()) * boost::multiprecision::pow(BigInt(a.den()), root);
    return lhs <= rhs;
  }
  static bool pow_lt(const Rational& a, const Rational& rho, unsigned root) {
    BigInt lhs = boost::multiprecision::pow(BigInt(a.num()), root) * BigInt(rho.den());
    BigInt rhs = BigInt(rho.num()) * boost::multiprecision::pow(BigInt(a.den()), root);
    return lhs < rhs;
  }

  Rational rho_;
  unsigned root_;
};

}  // namespace gt
