#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "catindex/errors.hpp"

namespace catindex {

// Exact rational on checked 64-bit components. All closed-form evaluation
// goes through this type and only drops to double at comparison boundaries.
// Any intermediate that leaves the int64 range throws Error(Overflow).
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) fail(ErrorCode::Overflow, "rational with zero denominator");
    normalize();
  }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  // 2^k for any (possibly negative) exponent representable in int64.
  static Rational pow2(std::int64_t k) {
    if (k >= 0) {
      if (k > 62) fail(ErrorCode::Overflow, "2^" + std::to_string(k));
      return Rational(std::int64_t{1} << k);
    }
    if (k < -62) fail(ErrorCode::Overflow, "2^" + std::to_string(k));
    return Rational(1, std::int64_t{1} << (-k));
  }

  Rational operator-() const { return Rational(checked_neg(num_), den_, unchecked_tag{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                    checked_mul(a.den_, b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorCode::Overflow, "rational division by zero");
    return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Exact integer value; caller must have checked is_integer().
  std::int64_t to_integer() const {
    if (!is_integer()) fail(ErrorCode::Overflow, "rational " + str() + " is not an integer");
    return num_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  struct unchecked_tag {};
  Rational(std::int64_t num, std::int64_t den, unchecked_tag) : num_(num), den_(den) {}

  static std::int64_t narrow(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) fail(ErrorCode::Overflow, what);
    return static_cast<std::int64_t>(v);
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    return narrow(static_cast<__int128>(a) + b, "rational addition");
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    return narrow(static_cast<__int128>(a) * b, "rational multiplication");
  }
  static std::int64_t checked_neg(std::int64_t a) {
    return narrow(-static_cast<__int128>(a), "rational negation");
  }

  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    if (num_ == INT64_MIN) fail(ErrorCode::Overflow, "rational normalization");
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace catindex
