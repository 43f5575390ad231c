#include <random>

#include "doctest.h"
#include "selfshuffle/stones.hpp"

using namespace selfshuffle;

namespace {
QuadExt q(const char* s) { return QuadExt::parse(s); }
const QuadExt golden = QuadExt::parse("(3-sqrt(5))/2");
CirclePoint orbit(std::size_t i) { return CirclePoint(QuadExt(static_cast<std::int64_t>(i)) * golden); }
}  // namespace

TEST_CASE("membership in K") {
  CHECK(in_K(CirclePoint(), CirclePoint(), q("3/10")));
  for (const char* r : {"0", "1/3", "(3-sqrt(5))/2", "99/100"}) CHECK(in_K(CirclePoint(), CirclePoint(), q(r)));
  CHECK_FALSE(in_K(CirclePoint(q("4/5")), CirclePoint(q("4/5")), q("3/10")));
}

TEST_CASE("graph and embedding agree") {
  for (const char* r : {"(3-sqrt(5))/2", "0", "1", "1/3", "1/2", "(sqrt(5)-1)/4"}) {
    auto rep = graph_vs_embedding_check({golden, q(r)}, 300);
    CHECK(rep.ok);
    CHECK(rep.mismatch_count == 0);
  }
}

TEST_CASE("no vertices on a denominator row for rho = 0") {
  // {q alpha} close to 1 for the odd-index denominators q = 2, 5, 13, 34 of alpha = (3 - sqrt 5)/2
  EmbeddingParams p{golden, 0};
  for (std::size_t den : {5u, 13u, 34u}) {
    CHECK((QuadExt(static_cast<std::int64_t>(den)) * golden).frac() > q("9/10"));
    for (std::size_t j = 1; j <= den; ++j) CHECK_FALSE(embedding_vertex(den, j, p));
  }
  CHECK(embedding_vertex(0, 0, p));
}

TEST_CASE("regions partition K and match their definitions") {
  for (const char* r : {"1/2", "3/5", "11/20"}) {
    EmbeddingParams p{golden, q(r)};
    REQUIRE(in_regime(p));
    std::mt19937_64 rng(17);
    std::size_t f_points = 0;
    for (int t = 0; t < 2000; ++t) {
      auto x = orbit(rng() % 3000), y = orbit(rng() % 3000);
      auto flags = region_flags(x, y, p);
      if (flags.in_k) CHECK(flags.dead_core + flags.t1 + flags.t2 <= 1);
      Region reg = region_classify(x, y, p);
      CHECK(reg == region_by_definition(x, y, p));
      if (!flags.in_k) CHECK(reg == Region::D);
      if (reg == Region::F) {
        ++f_points;
        CHECK(region_classify(x.rotate(p.alpha), y, p) != Region::D);
        CHECK(region_classify(x, y.rotate(p.alpha), p) != Region::D);
        for (int b = 1; b <= 2; ++b) {
          auto res = tilde_map(x, y, b, p);
          CHECK(res.steps_x + res.steps_y >= 1);
          CHECK(region_classify(res.x, res.y, p) == Region::F);
          for (const auto& s : res.transcript) CHECK(s.region != Region::D);
        }
      }
    }
    CHECK(f_points > 100);
  }
  // the closed-form dead core
  EmbeddingParams p{golden, q("1/2")};
  QuadExt c = QuadExt(1) - golden - p.rho;
  CHECK(region_classify(CirclePoint(c / 2), CirclePoint(c / 2), p) == Region::D);
  CHECK_THROWS_AS(region_classify(CirclePoint(), CirclePoint(), {golden, q("1/3")}), DomainError);
  CHECK_FALSE(in_regime({golden, QuadExt(1) - golden}));
}

TEST_CASE("stepping stone paths") {
  std::vector<std::pair<std::size_t, std::size_t>> fig{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2},
                                                       {4, 2}, {5, 2}, {5, 3}, {5, 4}, {5, 5}};
  for (auto [i, j] : fig) CHECK(in_K(orbit(i), orbit(j), q("2/5")));
  for (const char* r : {"2/5", "1/3", "(3-sqrt(5))/2"}) {
    EmbeddingParams p{golden, q(r)};
    auto res = path_extract(p, 2000);
    REQUIRE(res.outcome.kind == SearchOutcome::Kind::witness);
    const auto& pts = res.path.points;
    REQUIRE(pts.size() == 2001);
    for (std::size_t n = 0; n < pts.size(); ++n) {
      CHECK(pts[n].first + pts[n].second == n);
      if (n) CHECK(pts[n].first >= pts[n - 1].first);
      if (n) CHECK(pts[n].second >= pts[n - 1].second);
      CHECK(in_K(orbit(pts[n].first), orbit(pts[n].second), p.rho));
    }
    CHECK(std::min(pts.back().first, pts.back().second) >= 500);
  }
  for (const char* r : {"0", "1"}) {
    auto res = path_extract({golden, q(r)}, 5000);
    CHECK(res.outcome.kind == SearchOutcome::Kind::dead);
    CHECK(res.certified);
  }
}

TEST_CASE("figure and table output") {
  EmbeddingParams p{golden, q("2/5")};
  auto res = path_extract(p, 50);
  auto csv = stones_csv(p, res.path);
  CHECK(csv.rfind("n,i_n,j_n,x_approx,y_approx\n0,0,0,0.000000000000,0.000000000000\n", 0) == 0);
  auto svg = stones_svg(p, res.path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}
