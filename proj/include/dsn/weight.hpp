#ifndef DSN_WEIGHT_HPP
#define DSN_WEIGHT_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "dsn/errors.hpp"

namespace dsn {

// Exact rational edge weight. All cost accounting in the library goes
// through this type; there is no floating point anywhere on a cost path.
// Stored in lowest terms with a positive denominator.
class Weight {
public:
  Weight() : num_(0), den_(1) {}
  Weight(long long n) : num_(n), den_(1) {}
  Weight(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  Weight operator+(const Weight& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Weight operator-(const Weight& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Weight operator-() const { return Weight(-num_, den_); }
  Weight operator*(const Weight& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Weight operator/(const Weight& o) const {
    if (o.num_ == 0) throw ContractError("division of weight by zero");
    return make(i128(num_) * o.den_, i128(den_) * o.num_);
  }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }
  Weight& operator-=(const Weight& o) { return *this = *this - o; }
  Weight& operator*=(const Weight& o) { return *this = *this * o; }
  Weight& operator/=(const Weight& o) { return *this = *this / o; }

  bool operator==(const Weight& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  bool operator<(const Weight& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
  }
  bool operator>(const Weight& o) const { return o < *this; }
  bool operator<=(const Weight& o) const { return !(o < *this); }
  bool operator>=(const Weight& o) const { return !(*this < o); }

  // Renders "n" for integers and "n/d" otherwise.
  std::string str() const;

  // Accepts "n" or "n/d"; throws ParseError on anything else.
  static Weight parse(const std::string& text);

private:
  using i128 = __int128;

  static Weight make(i128 n, i128 d) {
    Weight w;
    w.assign128(n, d);
    return w;
  }

  void assign(long long n, long long d) { assign128(n, d); }

  void assign128(i128 n, i128 d) {
    if (d == 0) throw ContractError("weight with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      throw std::overflow_error("weight arithmetic overflow");
    num_ = (long long)n;
    den_ = (long long)d;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_;
  long long den_;
};

}  // namespace dsn

#endif
