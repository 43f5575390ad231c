#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace selfshuffle {

// Precondition violations (maps to CLI exit code 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input (maps to CLI exit code 2).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (a + b*sqrt(d)) / c with int64 fields, canonical form:
// c > 0, gcd(a,b,c) = 1, d square-free >= 2 when b != 0, d = 0 when b == 0.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(std::int64_t n) : a_(n) {}  // NOLINT: integers convert implicitly

  static QuadExt make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static QuadExt rational(std::int64_t num, std::int64_t den = 1);
  static QuadExt sqrt_of(std::int64_t n);  // sqrt(n), n >= 0
  static QuadExt parse(std::string_view text);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadExt conjugate() const;
  QuadExt operator-() const;
  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y);
  QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
  QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

  int sign() const;
  std::int64_t floor() const;
  QuadExt frac() const;  // x - floor(x), in [0,1)
  double to_double() const;
  std::string to_string() const;

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t c_ = 1;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

bool is_square_free(std::int64_t d);

// A point of the circle R/Z, stored as its representative in [0,1).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(const QuadExt& x) : v_(x.frac()) {}
  const QuadExt& value() const { return v_; }
  CirclePoint rotate(const QuadExt& alpha) const { return CirclePoint(v_ + alpha); }
  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;

 private:
  QuadExt v_;
};

inline CirclePoint rotate(const CirclePoint& p, const QuadExt& alpha) { return p.rotate(alpha); }

}  // namespace selfshuffle
