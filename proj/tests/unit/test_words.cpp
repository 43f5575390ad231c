#include <random>

#include "doctest.h"
#include "selfshuffle/constructive.hpp"
#include "selfshuffle/words.hpp"

using namespace selfshuffle;

namespace {
bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }
}  // namespace

TEST_CASE("prefixes of named words") {
  CHECK(words::thue_morse().to_string(12) == "011010011001");
  CHECK(words::thue_morse().to_string(40) == "0110100110010110100101100110100110010110");
  CHECK(words::fibonacci().to_string(22) == "0100101001001010010100");
  CHECK(words::period_doubling().to_string(26) == "01000101010001000100010101");
  CHECK(named_word("paper-folding").to_string(20) == "00100110001101100010");
  CHECK(named_word("three-shuffle-example").to_string(16) == "0100010001010100");
  CHECK(named_word("full-complexity").to_string(10) == "0101001100");
  CHECK(words::fibonacci().to_string(0).empty());
  CHECK_THROWS_AS(named_word("nope"), DomainError);
}

TEST_CASE("parikh vectors") {
  CHECK(FiniteWord::parse("0110").parikh() == std::vector<std::size_t>{2, 2});
  CHECK(FiniteWord().parikh() == std::vector<std::size_t>{0, 0});
  CHECK(FiniteWord::parse("00011011").parikh() == std::vector<std::size_t>{4, 4});
  auto u = FiniteWord::parse("0010111"), v = FiniteWord::parse("10");
  auto uv = (u + v).parikh(), pu = u.parikh(), pv = v.parikh();
  CHECK(uv[0] == pu[0] + pv[0]);
  CHECK(uv[1] == pu[1] + pv[1]);
}

TEST_CASE("morphisms") {
  auto phi = Morphism::parse("0:01,1:0");
  CHECK(phi.apply(FiniteWord::parse("01")).to_string() == "010");
  auto g = thue_morse::g();
  CHECK(g.apply(FiniteWord(g.domain(), {0, 1})).to_string() == "0011001011010010");
  auto h = thue_morse::h();
  CHECK(h.apply(FiniteWord(h.domain(), {0})).to_string() == "01101001");
  CHECK_THROWS_AS(Morphism::parse("0:01,1"), ParseError);
  CHECK(Morphism::parse("0:,1:1").is_erasing());
}

TEST_CASE("fixed points") {
  CHECK(fixed_point(Morphism::parse("0:01,1:0"), 0).to_string(10) == "0100101001");
  CHECK(fixed_point(Morphism::parse("0:01,1:10"), 0).to_string(40) == words::thue_morse().to_string(40));
  CHECK(fixed_point(Morphism::parse("0:01,1:00"), 0).to_string(16) == "0100010101000100");
  CHECK_THROWS_AS(fixed_point(Morphism::parse("0:10,1:0"), 0), DomainError);
  CHECK_THROWS_AS(fixed_point(Morphism::parse("0:0,1:1"), 0), DomainError);
  for (const char* m : {"0:01,1:0", "0:01,1:10", "0:01,1:00", "0:0001,1:0101"}) {
    auto mu = Morphism::parse(m);
    auto x = fixed_point(mu, 0);
    CHECK(mu.apply(x).to_string(10000) == x.to_string(10000));
  }
}

TEST_CASE("prefix cache is deterministic under interleaved calls") {
  std::mt19937_64 rng(5);
  auto x = words::fibonacci();
  auto ref = words::fibonacci().to_string(5000);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = rng() % 5000;
    CHECK(x.to_string(n) == ref.substr(0, n));
  }
  CHECK(drop(x, 3).to_string(20) == ref.substr(3, 20));
  CHECK(prepend(FiniteWord::parse("0"), x).to_string(10) == "0" + ref.substr(0, 9));
}

TEST_CASE("morphic image of a prefix is a prefix of the image") {
  auto mu = Morphism::parse("0:011,1:0");
  auto x = words::thue_morse();
  auto img = mu.apply(x);
  for (std::size_t n : {0, 1, 7, 100}) {
    auto p = mu.apply(x.prefix(n));
    CHECK(img.to_string(p.size()) == p.to_string());
  }
}

TEST_CASE("full-complexity blocks") {
  CHECK(full_complexity::block(0).to_string() == "01");
  CHECK(full_complexity::block(2).to_string() == "0011");
  CHECK(full_complexity::z(2).to_string() == "00011011");
  auto x = named_word("full-complexity").to_string(1 << 18);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto z = full_complexity::z(n).to_string();
    // z_n sits inside v_i for i = n 2^(n-1); its first occurrence passes 2^30 letters once n >= 4
    std::size_t i = n << (n - 1);
    CHECK(full_complexity::v(i).to_string() == z);
    if (n <= 3) CHECK(contains(x, z));
  }
  CHECK(contains(full_complexity::y(8).to_string(), full_complexity::v(8).to_string()));
  auto x3 = full_complexity::block(3).to_string();
  CHECK(x3 == "000" + full_complexity::y(1).to_string() + "111");
}

TEST_CASE("eventually periodic words and isomorphism") {
  auto w = InfiniteWord::eventually_periodic(FiniteWord::parse("0"), FiniteWord::parse("1"));
  CHECK(w.to_string(5) == "01111");
  REQUIRE(w.periodicity());
  CHECK(w.periodicity()->preperiod == 1);
  std::vector<Letter> a{0, 1, 1, 0}, b{1, 0, 0, 1}, c{1, 0, 1, 1};
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, c));
}
