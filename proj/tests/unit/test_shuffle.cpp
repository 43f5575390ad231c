#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "selfshuffle/constructive.hpp"
#include "selfshuffle/shuffle.hpp"

using namespace selfshuffle;

namespace {
InfiniteWord periodic(const char* u, const char* v) {
  return InfiniteWord::eventually_periodic(FiniteWord::parse(u), FiniteWord::parse(v));
}
InfiniteWord steer(const char* pattern) { return InfiniteWord::eventually_periodic(FiniteWord(Alphabet::steering(2)), FiniteWord::parse(pattern, Alphabet::steering(2))); }

// every (i, j) reached by some steering prefix that keeps the shuffle of u with itself equal to u
std::vector<std::set<std::size_t>> brute_levels(const std::vector<Letter>& u) {
  std::vector<std::set<std::size_t>> lv(u.size() + 1);
  for (std::size_t n = 0; n <= u.size(); ++n) {
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      std::size_t i = 0, j = 0;
      bool ok = true;
      for (std::size_t t = 0; t < n && ok; ++t) {
        std::size_t& c = ((m >> t) & 1) ? j : i;
        ok = u[c] == u[t];
        ++c;
      }
      if (ok) lv[n].insert(i);
    }
  }
  return lv;
}
}  // namespace

TEST_CASE("interleave") {
  auto x = periodic("", "01");
  CHECK(interleave({x, x}, steer("12")).to_string(8) == "00110011");
  CHECK(interleave({x, x}, steer("1122")).to_string(12) == "010101010101");
  std::vector<FiniteWord> parts{FiniteWord::parse("0010"), FiniteWord::parse("101"), FiniteWord::parse("11")};
  // some steering word produces 011100110; find it by brute force
  bool found = false;
  for (std::size_t m = 0; m < 19683 && !found; ++m) {
    std::vector<Letter> s;
    std::size_t t = m;
    std::size_t cnt[3] = {0, 0, 0};
    for (int p = 0; p < 9; ++p, t /= 3) {
      s.push_back(static_cast<Letter>(t % 3));
      ++cnt[t % 3];
    }
    if (cnt[0] != 4 || cnt[1] != 3 || cnt[2] != 2) continue;
    found = interleave_finite(parts, s).to_string() == "011100110";
  }
  CHECK(found);
}

TEST_CASE("verify_witness") {
  auto fib = words::fibonacci();
  auto ok = verify_witness(fibonacci_shuffle(), 1000);
  CHECK(ok.ok);
  CHECK(ok.consumed[0] + ok.consumed[1] == 1000);
  ShuffleWitness p;
  p.word = periodic("", "01");
  p.steering = steer("1122");
  CHECK(verify_witness(p, 100).ok);
  ShuffleWitness all1;
  all1.word = fib;
  all1.steering = steer("1");
  auto r = verify_witness(all1, 100);
  CHECK(r.ok);
  CHECK(r.consumed == std::vector<std::size_t>{100, 0});
  CHECK(r.degenerate());
  CHECK(r.starved() == std::vector<std::size_t>{1});
  ShuffleWitness bad;
  bad.word = fib;
  bad.steering = steer("12");
  auto b = verify_witness(bad, 100);
  CHECK_FALSE(b.ok);
  REQUIRE(b.mismatch);
}

TEST_CASE("steering word construction") {
  std::vector<Letter> s;
  for (char ch : std::string("1111231223123")) s.push_back(static_cast<Letter>(ch - '1'));
  auto c = steering_to_word(s, s.size());
  CHECK(c.r == 4);
  CHECK(c.word.to_string() == "abcdaaabcbadc");
  CHECK(c.ell == std::vector<std::size_t>{0, 1, 2, 3, 0, 0, 4, 1, 2, 1, 5, 3, 2});
  std::vector<Letter> t;
  for (int i = 0; i < 300; ++i) t.push_back(i % 3 == 2 ? 1 : 0);
  auto d = steering_to_word(t, t.size());
  CHECK(d.r == 2);
  ShuffleWitness w;
  w.word = InfiniteWord(d.word.alphabet(), [v = d.word.letters()](std::vector<Letter>& out, std::size_t n) {
    if (n > v.size()) throw DomainError("past the constructed prefix");
    out.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  });
  w.steering = finite_steering(t, 2);
  CHECK(verify_witness(w, 300).ok);
  CHECK_THROWS_AS(steering_to_word(std::vector<Letter>(10, 0), 10), DomainError);
}

TEST_CASE("frontier steps") {
  auto f0 = initial_frontier(2);
  CHECK(f0.tuples == std::vector<std::vector<std::size_t>>{{0, 0}});
  auto x = periodic("0", "1");
  auto f1 = frontier_step(x, f0);
  CHECK(f1.tuples.size() == 2);
  auto f2 = frontier_step(x, f1);
  CHECK(f2.tuples == std::vector<std::vector<std::size_t>>{{0, 2}, {2, 0}});
  auto y = periodic("", "01");
  auto g2 = frontier_step(y, frontier_step(y, f0));
  // (1,1): Psi(0) + Psi(0) = (2,0) differs from Psi(01) = (1,1)
  CHECK(g2.tuples == std::vector<std::vector<std::size_t>>{{0, 2}, {2, 0}});
}

TEST_CASE("lattice levels agree with exhaustive enumeration") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    std::size_t len = 1 + rng() % 14;
    std::vector<Letter> u;
    for (std::size_t i = 0; i < len; ++i) u.push_back(static_cast<Letter>(rng() & 1));
    ParikhTable table(FiniteWord(Alphabet::binary(), u));
    auto lv = lattice_levels(len, [&](std::size_t i, std::size_t j) { return table.vertex2(i, j); });
    auto br = brute_levels(u);
    for (std::size_t n = 0; n <= len; ++n) {
      CHECK(std::set<std::size_t>(lv[n].begin(), lv[n].end()) == br[n]);
    }
  }
}

TEST_CASE("search outcomes") {
  auto fib = search_self_shuffle(words::fibonacci(), 2, 2000);
  REQUIRE(fib.kind == SearchOutcome::Kind::witness);
  CHECK(verify_witness(witness_from_search(words::fibonacci(), fib, 2), 2000).ok);
  auto dead = search_self_shuffle(periodic("0", "1"), 2, 1000);
  CHECK(dead.kind == SearchOutcome::Kind::dead);
  CHECK(dead.death == SearchOutcome::Death::starvation);
  auto zf = search_self_shuffle(prepend(FiniteWord::parse("0"), words::fibonacci()), 2, 2000);
  CHECK(zf.kind == SearchOutcome::Kind::dead);
  auto per = search_self_shuffle(periodic("", "01"), 2, 500);
  CHECK(per.kind == SearchOutcome::Kind::witness);
  CHECK_THROWS_AS(search_self_shuffle(words::fibonacci(), 1, 10), DomainError);
}

TEST_CASE("constructive witnesses lie inside the search frontiers") {
  auto x = words::fibonacci();
  auto steering = fibonacci_shuffle().steering.letters(3000);
  ParikhTable table(x.prefix(3000));
  auto lv = lattice_levels(3000, [&](std::size_t i, std::size_t j) { return table.vertex2(i, j); });
  std::size_t i = 0;
  for (std::size_t n = 0; n < steering.size(); ++n) {
    i += steering[n] == 0;
    CHECK(std::binary_search(lv[n + 1].begin(), lv[n + 1].end(), i));
  }
}

TEST_CASE("morphic transport") {
  auto w = fibonacci_shuffle();
  for (const char* m : {"0:0,1:1", "0:011,1:0", "0:1,1:00", "0:10,1:1101"}) {
    auto tau = Morphism::parse(m);
    auto t = morphic_transport(w, tau);
    CHECK(verify_witness(t, 3000).ok);
    CHECK(t.word.to_string(100) == tau.apply(words::fibonacci()).to_string(100));
  }
  CHECK_THROWS_AS(morphic_transport(w, Morphism::parse("0:,1:1")), DomainError);
}

TEST_CASE("prefix removal transport for period-doubling") {
  auto sigma = Morphism::parse("0:01,1:00");
  auto t = prefix_removal_transport(period_doubling_shuffle(), sigma, 1, FiniteWord::parse("0"));
  CHECK(t.word.to_string(50) == drop(words::period_doubling(), 1).to_string(50));
  CHECK(verify_witness(t, 4000).ok);
}
