#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "gencol/errors.hpp"

namespace gencol {

// Exact rational arithmetic for edge densities, profile averages and the
// bounds they are compared against. Values in this library are tiny, but
// comparisons go through 128-bit intermediates so chained products such as
// ((d-1)/2)^r stay exact.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den) : num_(num), den_(den) {
    if (den_ == 0) throw InputError("rational with zero denominator");
    normalize();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw InputError("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }

  Rational pow(int e) const {
    Rational out(1);
    Rational base = *this;
    for (int i = 0; i < e; ++i) out = out * base;
    return out;
  }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

inline Rational ceil_to_int(const Rational& q) {
  long long d = q.num() / q.den();
  if (q.num() % q.den() != 0 && q.num() > 0) d += 1;
  return Rational(d);
}

}  // namespace gencol
