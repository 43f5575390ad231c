#include "doctest.h"
#include "selfshuffle/constructive.hpp"

using namespace selfshuffle;

namespace {
QuadExt q(const char* s) { return QuadExt::parse(s); }
const QuadExt golden = QuadExt::parse("(3-sqrt(5))/2");

std::string take(const ShuffleWitness& w, std::size_t n) { return w.steering.to_string(n); }
}  // namespace

TEST_CASE("Thue-Morse local shuffles") {
  auto g = thue_morse::g(), h = thue_morse::h(), s = thue_morse::sigma();
  CHECK((thue_morse::u() + g.apply(s.apply(FiniteWord(s.domain(), {0})))).to_string() == "011010011001011010010");
  for (Letter a = 0; a < 4; ++a) {
    FiniteWord one(s.domain(), {a});
    auto target = g.apply(s.apply(one)), ga = g.apply(one), ha = h.apply(one);
    std::vector<Letter> steering;
    const auto& len = thue_morse::piece_lengths(a);
    for (std::size_t t = 0; t < len.size(); ++t) steering.insert(steering.end(), len[t], static_cast<Letter>(t % 2));
    CHECK(interleave_finite({ga, ha}, steering) == target);
  }
  FiniteWord two(s.domain(), {1});
  CHECK(g.apply(s.apply(two)).to_string() == "1100110100110010");
  CHECK(g.apply(two).to_string() == "11010010");
  CHECK(h.apply(two).to_string() == "10010110");
}

TEST_CASE("explicit witnesses verify") {
  CHECK(verify_witness(tm_shuffle(), 1 << 15).ok);
  CHECK(verify_witness(fibonacci_shuffle(), 10000).ok);
  CHECK(verify_witness(period_doubling_shuffle(), 10000).ok);
  CHECK(verify_witness(full_complexity_shuffle(), 10000).ok);
  auto three = three_shuffle_example();
  CHECK(three.k == 3);
  auto r = verify_witness(three, 10000);
  CHECK(r.ok);
  CHECK_FALSE(r.degenerate());
}

TEST_CASE("three-shuffle blocks") {
  CHECK(three_shuffle::block(0, 0).to_string() == "0100");
  CHECK(three_shuffle::block(1, 0).to_string() == "0100");
  CHECK(three_shuffle::block(2, 0).to_string() == "01");
  CHECK(three_shuffle::block(2, 1).to_string() == "00010001");
  auto sigma = Morphism::parse("0:0001,1:0101");
  CHECK(three_shuffle::block(0, 3) == sigma.apply(FiniteWord::parse("0100")));
}

TEST_CASE("full-complexity index sets") {
  for (std::size_t i = 2; i <= 8; ++i) {
    auto big = full_complexity::block(i + 1), small = full_complexity::block(i);
    auto n = full_complexity::index_set(i);
    std::vector<bool> in(big.size(), false);
    FiniteWord a, b;
    for (auto p : n) in.at(p) = true;
    for (std::size_t p = 0; p < big.size(); ++p) (in[p] ? a : b).push_back(big[p]);
    CHECK(a == small);
    CHECK(b == small);
  }
}

TEST_CASE("rotation machine") {
  std::shared_ptr<RotationMachine> m;
  auto d = DirectiveSequence::parse("[0,1]");
  RotationPoint p01(golden, QuadExt(1) - golden, true);  // 01C: left limit at 1 - alpha
  CHECK(coding(p01).to_string(30) == pal_word(d, PalVariant::c01).to_string(30));
  sturmian_shuffle(p01, p01, p01, &m);
  m->run(2000);
  CHECK(m->initial_case() == RotationCase::c1_2);
  for (const auto& t : m->transitions()) CHECK(is_machine_edge(t.from, t.to));
  for (const char* r : {"(3-sqrt(5))/2", "1/3", "(sqrt(5)-1)/4", "1/2", "(sqrt(5)-1)/2"}) {
    auto w = sturmian_shuffle(golden, q(r), q(r), q(r));
    auto rep = verify_witness(w, 10000);
    CHECK(rep.ok);
    CHECK_FALSE(rep.degenerate());
  }
  CHECK_THROWS_AS(sturmian_shuffle(golden, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(sturmian_shuffle(golden, 1, 1, 1), DomainError);
  // slope above 1/2 runs on the exchanged words
  auto hi = sturmian_shuffle(q("(sqrt(5)-1)/2"), q("1/3"), q("1/3"), q("1/3"));
  CHECK(verify_witness(hi, 5000).ok);
}

TEST_CASE("rotation machine with distinct words") {
  // S <= M <= L by intercept order of the coded words
  auto s = RotationPoint::from_intercept(golden, q("1/5"));
  auto mm = RotationPoint::from_intercept(golden, q("1/3"));
  auto l = RotationPoint::from_intercept(golden, q("1/2"));
  REQUIRE(s <= mm);
  REQUIRE(mm <= l);
  auto w = sturmian_shuffle(s, mm, l);
  CHECK(verify_witness(w, 5000).ok);
  CHECK_THROWS_AS(sturmian_shuffle(l, mm, s), DomainError);
  // rho(M) = rho(S) with rho(L) = 0 is excluded
  auto zero = RotationPoint::from_intercept(golden, 0);
  auto third = RotationPoint::from_intercept(golden, q("1/3"));
  if (third <= zero) CHECK_THROWS_AS(sturmian_shuffle(third, third, zero), DomainError);
}

TEST_CASE("characteristic shuffle") {
  CharacteristicShuffle c(words::fibonacci());
  CHECK(c.k(1) == 1);
  CHECK(c.k(2) == 2);
  CHECK(c.terms(1).u1 == static_cast<long long>(c.k(1)));
  CHECK(c.terms(2).u1 == static_cast<long long>(c.k(1)));
  CHECK(c.terms(1).v1 == 1);
  for (const char* d : {"[0,1]", "0,0,1,0,1,1,0,1,[0,1]", "0,1,1,0,[0,0,1]"}) {
    auto x = characteristic_from_directive(DirectiveSequence::parse(d));
    CharacteristicShuffle cs(x);
    for (std::size_t n = 1; n <= 300; ++n) {
      auto t = cs.terms(n);
      CHECK(t.u1 >= 0);
      CHECK(t.v1 >= 0);
      CHECK(t.u2 >= 0);
      CHECK(t.v2 >= 0);
    }
    CHECK(verify_witness(characteristic_shuffle(x), 10000).ok);
  }
}

TEST_CASE("palindromic shuffles") {
  auto d = DirectiveSequence::parse("0,0,1,0,1,1,0,1");
  std::vector<std::string> want01{"01", "0", "0", "100", "0100", "10001001000100", "010010001001000100"};
  auto b01 = pal_display_blocks(d, PalVariant::c01, want01.size());
  REQUIRE(b01.size() == want01.size());
  for (std::size_t i = 0; i < want01.size(); ++i) {
    CHECK(b01[i].word.to_string() == want01[i]);
    CHECK(b01[i].copy == static_cast<int>(i % 2));
  }
  std::vector<std::string> want10{"1000", "1000100", "10001001000100", "010010001001000100"};
  auto b10 = pal_display_blocks(d, PalVariant::c10, want10.size());
  REQUIRE(b10.size() == want10.size());
  for (std::size_t i = 0; i < want10.size(); ++i) CHECK(b10[i].word.to_string() == want10[i]);
  CHECK(pal_word(d, PalVariant::c01).to_string(40).substr(0, 2) == "01");
  auto dd = DirectiveSequence::parse("0,0,1,0,1,1,0,1,[0,1]");
  CHECK(verify_witness(pal_shuffle(dd, PalVariant::c01), 1000).ok);
  CHECK(verify_witness(pal_shuffle(dd, PalVariant::c10), 1000).ok);
  CHECK_THROWS_AS(pal_shuffle(DirectiveSequence::parse("1,0,[1]"), PalVariant::c01), DomainError);
}

TEST_CASE("pal shuffle coincides with the rotation machine") {
  auto d = DirectiveSequence::parse("0,0,1,0,1,1,0,1,[0,1]");
  auto x = pal_word(d, PalVariant::c01);
  QuadExt a = slope_from_directive(d);
  RotationPoint p(a, QuadExt(1) - a, true);
  REQUIRE(coding(p).to_string(2000) == x.to_string(2000));
  // the same partition; copy labels may be exchanged
  auto sm = sturmian_shuffle(p, p, p).steering.letters(2000);
  auto sp = pal_shuffle(d, PalVariant::c01).steering.letters(2000);
  CHECK(isomorphic(sm, sp));
}

TEST_CASE("machine delay") {
  std::shared_ptr<RotationMachine> m;
  sturmian_shuffle(golden, golden, golden, golden, &m);
  auto st = m->steering();
  std::size_t dl = machine_delay(*m, 1000);
  m->run(dl + 1);
  CHECK(m->steering()[dl] != m->steering()[0]);
  for (std::size_t i = 0; i < dl; ++i) CHECK(m->steering()[i] == m->steering()[0]);
}
