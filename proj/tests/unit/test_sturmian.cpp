#include <algorithm>

#include "doctest.h"
#include "selfshuffle/sturmian.hpp"

using namespace selfshuffle;

namespace {
QuadExt q(const char* s) { return QuadExt::parse(s); }
const QuadExt golden = QuadExt::parse("(3-sqrt(5))/2");

// shortest palindrome with prefix u, by brute force
std::string brute_pal(const std::string& u) {
  for (std::size_t extra = 0;; ++extra) {
    for (std::size_t m = 0; m < (std::size_t{1} << extra); ++m) {
      std::string w = u;
      for (std::size_t b = 0; b < extra; ++b) w += ((m >> b) & 1) ? '1' : '0';
      if (std::equal(w.begin(), w.end(), w.rbegin())) return w;
    }
  }
}
}  // namespace

TEST_CASE("mechanical words") {
  CHECK(mechanical(golden, golden).to_string(22) == "0100101001001010010100");
  CHECK(mechanical(golden, golden).to_string(3000) == words::fibonacci().to_string(3000));
  auto c = mechanical(golden, golden).to_string(200);
  CHECK(mechanical(golden, 0).to_string(201) == "0" + c);
  CHECK(mechanical(golden, 1).to_string(201) == "1" + c);
  CHECK_THROWS_AS(mechanical(q("1/3"), 0), DomainError);
  CHECK_THROWS_AS(mechanical(golden, q("3/2")), DomainError);
}

TEST_CASE("mechanical letter counts and balance") {
  for (const char* r : {"0", "1/3", "(3-sqrt(5))/2", "(sqrt(5)-1)/2"}) {
    QuadExt rho = q(r);
    auto z = mechanical(golden, rho).letters(10000);
    std::size_t ones = 0;
    for (std::size_t n = 0; n <= z.size(); ++n) {
      CHECK(static_cast<std::int64_t>(ones) == (QuadExt(static_cast<std::int64_t>(n)) * golden + rho).floor());
      if (n < z.size()) ones += z[n];
    }
  }
  auto z = mechanical(q("sqrt(2)-1"), q("1/5")).letters(500);
  std::vector<int> pre(z.size() + 1, 0);
  for (std::size_t i = 0; i < z.size(); ++i) pre[i + 1] = pre[i] + z[i];
  for (std::size_t len = 1; len < 60; ++len) {
    int lo = 1 << 30, hi = -1;
    for (std::size_t i = 0; i + len <= z.size(); ++i) {
      lo = std::min(lo, pre[i + len] - pre[i]);
      hi = std::max(hi, pre[i + len] - pre[i]);
    }
    CHECK(hi - lo <= 1);
  }
}

TEST_CASE("palindromic closure") {
  CHECK(pal_closure(FiniteWord()).empty());
  CHECK(pal_closure(FiniteWord::parse("01")).to_string() == "010");
  CHECK(pal_closure(FiniteWord::parse("001")).to_string() == "00100");
  for (std::size_t len = 1; len <= 10; ++len) {
    for (std::size_t m = 0; m < (std::size_t{1} << len); ++m) {
      std::string u;
      for (std::size_t b = 0; b < len; ++b) u += ((m >> b) & 1) ? '1' : '0';
      CHECK(pal_closure(FiniteWord::parse(u)).to_string() == brute_pal(u));
    }
  }
}

TEST_CASE("characteristic words from directive sequences") {
  auto d = DirectiveSequence::parse("0,0,1,0,1,1,0,1,1");
  PalindromicConstruction pc(d);
  std::string expected = std::string("0") + "0" + "1" + "00" + "0" + "100" + "1" + "000100" + "1" + "000100" + "0" +
                         "10010001001000100" + "1" + "000";
  auto phi = pc.phi(9).to_string();
  REQUIRE(phi.size() >= expected.size());
  CHECK(phi.substr(0, expected.size()) == expected);
  CHECK(pc.block(1).to_string() == "0");
  CHECK(pc.block(2).to_string() == "0");
  CHECK(pc.block(3).to_string() == "100");
  CHECK(pc.block(4).to_string() == "0100");
  for (std::size_t k = 1; k <= 8; ++k) {
    CHECK(pc.phi(k).is_palindrome());
    CHECK(pc.phi_length(k) == pc.phi_length(k - 1) + pc.block(k).size());
  }
  auto zeros = characteristic_from_directive(DirectiveSequence::parse("[0]"));
  CHECK(zeros.to_string(12) == "000000000000");
  CHECK(PalindromicConstruction(DirectiveSequence::parse("0")).phi(1).to_string() == "0");
  // golden slope: directive 0,1,0,1,...
  CHECK(characteristic_from_directive(DirectiveSequence::parse("[0,1]")).to_string(2000) ==
        mechanical(golden, golden).to_string(2000));
  CHECK(slope_from_directive(DirectiveSequence::parse("[0,1]")) == golden);
}

TEST_CASE("directive parsing") {
  auto d = DirectiveSequence::parse("0,0,[1,0]");
  CHECK(d.at(1) == 0);
  CHECK(d.at(3) == 1);
  CHECK(d.at(6) == 0);
  CHECK(d.to_string() == "0,0,[1,0]");
  auto e = DirectiveSequence::parse("0,0,1,0,1,1,0,1");
  CHECK(*e.occurrence(0, 3) == 4);
  CHECK(*e.occurrence(0, 4) == 7);
  CHECK(*e.occurrence(1, 1) == 3);
  CHECK(*e.occurrence(1, 3) == 6);
  CHECK_THROWS_AS(DirectiveSequence::parse("0,2"), ParseError);
  CHECK_THROWS_AS(DirectiveSequence::parse("0,[1"), ParseError);
}

TEST_CASE("rotation points order words exactly") {
  for (const char* a : {"0", "1/3", "(3-sqrt(5))/2", "(sqrt(5)-1)/4", "(sqrt(5)-1)/2", "1"}) {
    for (const char* b : {"0", "1/3", "(3-sqrt(5))/2", "(sqrt(5)-1)/4", "(sqrt(5)-1)/2", "1"}) {
      auto x = RotationPoint::from_intercept(golden, q(a)), y = RotationPoint::from_intercept(golden, q(b));
      CHECK((x <=> y) == lex_compare_by_letters(x, y, 4096));
    }
  }
  CHECK(in_backward_orbit(QuadExt(1) - golden, golden));
  CHECK_FALSE(in_backward_orbit(q("1/3"), golden));
}
