#include <cmath>
#include <random>

#include "doctest.h"
#include "selfshuffle/quad.hpp"

using namespace selfshuffle;

namespace {
QuadExt q(const char* s) { return QuadExt::parse(s); }
}  // namespace

TEST_CASE("make canonicalizes") {
  auto half = QuadExt::make(1, 0, 2, 0);
  CHECK(half == QuadExt::rational(1, 2));
  CHECK(half.d() == 0);
  auto g = QuadExt::make(-1, 1, 2, 5);
  CHECK(g.a() == -1);
  CHECK(g.b() == 1);
  CHECK(g.c() == 2);
  CHECK(g.d() == 5);
  auto phi = QuadExt::make(2, 2, 4, 5);
  CHECK(phi == QuadExt::make(1, 1, 2, 5));
  CHECK(phi.c() == 2);
  CHECK(QuadExt::make(3, 0, -6, 7) == QuadExt::rational(-1, 2));
}

TEST_CASE("make rejects bad input") {
  CHECK_THROWS_AS(QuadExt::make(1, 1, 0, 5), DomainError);
  CHECK_THROWS_AS(QuadExt::make(1, 1, 2, 8), DomainError);
  CHECK_THROWS_AS(QuadExt::make(1, 1, 2, 4), DomainError);
}

TEST_CASE("exact comparison") {
  CHECK((QuadExt::rational(1, 2) <=> QuadExt::rational(1, 2)) == std::strong_ordering::equal);
  CHECK(q("(sqrt(5)-1)/2") > q("3/5"));
  CHECK(QuadExt(0) < q("(3-sqrt(5))/2"));
  CHECK(q("(3-sqrt(5))/2") < q("2/5"));
  CHECK(q("sqrt(2)") > q("1414/1000"));
  CHECK(q("sqrt(2)") < q("1415/1000"));
  CHECK_THROWS_AS((void)(q("sqrt(2)") < q("sqrt(3)")), DomainError);
}

TEST_CASE("frac and floor") {
  CHECK(QuadExt::rational(3, 2).frac() == QuadExt::rational(1, 2));
  CHECK(q("(sqrt(5)-1)/2").frac() == q("(sqrt(5)-1)/2"));
  CHECK(q("sqrt(5)").frac() == q("sqrt(5)-2"));
  CHECK(q("-sqrt(5)").floor() == -3);
  CHECK(QuadExt::rational(-1, 2).frac() == QuadExt::rational(1, 2));
}

TEST_CASE("rotation on the circle") {
  QuadExt a = q("(3-sqrt(5))/2");
  CHECK(CirclePoint().rotate(a).value() == a);
  CHECK(CirclePoint(QuadExt::rational(1, 2)).rotate(QuadExt::rational(1, 2)).value() == QuadExt(0));
  QuadExt g = q("(sqrt(5)-1)/2");
  CHECK(CirclePoint(g).rotate(g).value() == q("sqrt(5)-2"));
}

TEST_CASE("parse and print") {
  CHECK(q("(3-1*sqrt(5))/2") == QuadExt::make(3, -1, 2, 5));
  CHECK(q("1/3") == QuadExt::rational(1, 3));
  CHECK(q("(3-1*sqrt(5))/2").to_string() == "(3-1*sqrt(5))/2");
  CHECK(q(QuadExt::make(7, 2, 3, 2).to_string().c_str()) == QuadExt::make(7, 2, 3, 2));
  CHECK_THROWS_AS(q("(1+"), ParseError);
  CHECK_THROWS_AS(q("sqrt(8)/x"), ParseError);
  CHECK_THROWS_AS(q("1/0"), ParseError);
}

TEST_CASE("randomized agreement with floating point") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(-40, 40), den(1, 30);
  const std::int64_t ds[] = {2, 3, 5, 7};
  int compared = 0;
  for (int t = 0; t < 4000; ++t) {
    std::int64_t d = ds[t % 4];
    QuadExt x = QuadExt::make(small(rng), small(rng), den(rng), d);
    QuadExt y = QuadExt::make(small(rng), small(rng), den(rng), d);
    double fx = x.to_double(), fy = y.to_double();
    if (std::abs(fx - fy) > 1e-6) {
      ++compared;
      CHECK((x < y) == (fx < fy));
    }
    // rotate back and forth
    CirclePoint p(x);
    QuadExt a = y.frac();
    CHECK(p.rotate(a).rotate(QuadExt(1) - a).value() == p.value());
    CHECK(QuadExt(x.floor()) + x.frac() == x);
  }
  CHECK(compared > 3000);
}
