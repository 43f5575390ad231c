#include "selfshuffle/quad.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace selfshuffle {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("QuadExt: int64 overflow");
  return static_cast<std::int64_t>(v);
}

i128 mul(i128 x, i128 y) {
  i128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("QuadExt: int128 overflow");
  return r;
}

i128 add(i128 x, i128 y) {
  i128 r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("QuadExt: int128 overflow");
  return r;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 x, i128 y) {
  x = abs128(x);
  y = abs128(y);
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

// floor(sqrt(n)) for n >= 0
i128 isqrt(i128 n) {
  if (n < 0) throw DomainError("isqrt of negative");
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

i128 floor_div(i128 x, i128 y) {
  i128 q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

int sgn(i128 v) { return (v > 0) - (v < 0); }

// sign of a + b*sqrt(d)
int sign_surd(i128 a, i128 b, i128 d) {
  if (b == 0 || d == 0) return sgn(a);
  int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return 1;
  if (sa <= 0 && sb <= 0) return -1;
  i128 lhs = mul(a, a), rhs = mul(mul(b, b), d);
  // a^2 != b^2 d because d is not a square
  return sa > 0 ? (lhs > rhs ? 1 : -1) : (rhs > lhs ? 1 : -1);
}

QuadExt from128(i128 a, i128 b, i128 c, std::int64_t d) {
  if (c == 0) throw DomainError("QuadExt: zero denominator");
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  i128 g = gcd128(gcd128(a, b), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadExt::make(narrow(a), narrow(b), narrow(c), b == 0 ? 0 : d);
}

std::int64_t common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) throw DomainError("QuadExt: mixed radicands " + std::to_string(x.d()) + " and " + std::to_string(y.d()));
  return x.d();
}

}  // namespace

bool is_square_free(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadExt QuadExt::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (c == 0) throw DomainError("QuadExt: zero denominator");
  if (b != 0 && (d == 0 || d == 1)) {
    // sqrt(0) = 0, sqrt(1) = 1: fold to rational
    if (d == 1) a = narrow(static_cast<i128>(a) + b);
    b = 0;
  }
  if (b != 0) {
    if (d < 0) throw DomainError("QuadExt: negative radicand");
    if (!is_square_free(d)) throw DomainError("QuadExt: radicand " + std::to_string(d) + " is not square-free");
  }
  QuadExt q;
  i128 A = a, B = b, C = c;
  if (C < 0) {
    A = -A;
    B = -B;
    C = -C;
  }
  i128 g = gcd128(gcd128(A, B), C);
  if (g > 1) {
    A /= g;
    B /= g;
    C /= g;
  }
  q.a_ = narrow(A);
  q.b_ = narrow(B);
  q.c_ = narrow(C);
  q.d_ = q.b_ == 0 ? 0 : d;
  return q;
}

QuadExt QuadExt::rational(std::int64_t num, std::int64_t den) { return make(num, 0, den, 0); }

QuadExt QuadExt::sqrt_of(std::int64_t n) {
  if (n < 0) throw DomainError("sqrt of negative number");
  if (n == 0) return QuadExt();
  // n = k^2 * d with d square-free
  std::int64_t k = 1, d = n;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      d /= p * p;
      k *= p;
    }
  }
  if (d == 1) return QuadExt(k);
  return make(0, k, 1, d);
}

QuadExt QuadExt::conjugate() const { return make(a_, -b_, c_, d_); }

QuadExt QuadExt::operator-() const {
  return from128(-static_cast<i128>(a_), -static_cast<i128>(b_), c_, d_);
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  std::int64_t d = common_radicand(x, y);
  i128 g = gcd128(x.c(), y.c());
  i128 fx = y.c() / g, fy = x.c() / g;
  i128 a = add(mul(x.a(), fx), mul(y.a(), fy));
  i128 b = add(mul(x.b(), fx), mul(y.b(), fy));
  return from128(a, b, mul(x.c(), fx), d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  std::int64_t d = common_radicand(x, y);
  i128 a = add(mul(x.a(), y.a()), mul(mul(x.b(), y.b()), d));
  i128 b = add(mul(x.a(), y.b()), mul(x.b(), y.a()));
  return from128(a, b, mul(x.c(), y.c()), d);
}

QuadExt operator/(const QuadExt& x, const QuadExt& y) {
  if (y.is_zero()) throw DomainError("QuadExt: division by zero");
  std::int64_t d = common_radicand(x, y);
  // x / y = x * (a2 - b2 sqrt d) * c2 / (a2^2 - b2^2 d)
  i128 norm = add(mul(y.a(), y.a()), -mul(mul(y.b(), y.b()), d));
  i128 pa = x.a(), pb = x.b();
  i128 qa = y.a(), qb = -static_cast<i128>(y.b());
  i128 a = add(mul(pa, qa), mul(mul(pb, qb), d));
  i128 b = add(mul(pa, qb), mul(pb, qa));
  a = mul(a, y.c());
  b = mul(b, y.c());
  i128 c = mul(x.c(), norm);
  // reduce before narrowing in from128
  i128 g = gcd128(gcd128(a, b), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return from128(a, b, c, d);
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  if (x == y) return std::strong_ordering::equal;
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int QuadExt::sign() const { return sign_surd(a_, b_, d_); }

std::int64_t QuadExt::floor() const {
  i128 num;
  if (b_ == 0) {
    num = a_;
  } else {
    i128 r = isqrt(mul(mul(b_, b_), d_));
    num = b_ > 0 ? add(a_, r) : add(add(a_, -r), -1);
  }
  return narrow(floor_div(num, c_));
}

QuadExt QuadExt::frac() const { return *this - QuadExt(floor()); }

double QuadExt::to_double() const {
  long double v = static_cast<long double>(a_) + static_cast<long double>(b_) * std::sqrt(static_cast<long double>(d_));
  return static_cast<double>(v / static_cast<long double>(c_));
}

std::string QuadExt::to_string() const {
  std::ostringstream os;
  if (b_ == 0) {
    os << a_;
    if (c_ != 1) os << '/' << c_;
    return os.str();
  }
  os << '(' << a_ << (b_ < 0 ? '-' : '+') << (b_ < 0 ? -b_ : b_) << "*sqrt(" << d_ << "))";
  if (c_ != 1) os << '/' << c_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  QuadExt run() {
    QuadExt v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad number literal '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  QuadExt expr() {
    QuadExt v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }

  QuadExt term() {
    QuadExt v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        QuadExt den = factor();
        if (den.is_zero()) fail("division by zero");
        v = v / den;
      } else {
        return v;
      }
    }
  }

  QuadExt factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (eat('(')) {
      QuadExt v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (s_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      if (!eat('(')) fail("expected '(' after sqrt");
      QuadExt arg = expr();
      if (!eat(')')) fail("missing ')'");
      if (!arg.is_rational() || arg.c() != 1 || arg.a() < 0) fail("sqrt needs a non-negative integer");
      return QuadExt::sqrt_of(arg.a());
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      i128 v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_++] - '0');
        if (v > INT64_MAX) fail("integer too large");
      }
      return QuadExt(static_cast<std::int64_t>(v));
    }
    fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
  }
};

}  // namespace

QuadExt QuadExt::parse(std::string_view text) {
  try {
    return Parser(text).run();
  } catch (const DomainError& e) {
    throw ParseError("bad number literal '" + std::string(text) + "': " + e.what());
  }
}

}  // namespace selfshuffle
