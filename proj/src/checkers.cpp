#include "selfshuffle/checkers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace selfshuffle {

namespace {

// cnt[a * (n + 1) + i] = occurrences of letter a in u[0, i)
struct PrefixCounts {
  std::size_t n;
  std::size_t sigma;
  std::vector<std::uint32_t> cnt;

  PrefixCounts(std::span<const Letter> u, std::size_t alphabet)
      : n(u.size()), sigma(std::max<std::size_t>(alphabet, 1)), cnt(sigma * (u.size() + 1), 0) {
    for (std::size_t a = 0; a < sigma; ++a) {
      std::uint32_t* row = &cnt[a * (n + 1)];
      for (std::size_t i = 0; i < n; ++i) row[i + 1] = row[i] + (u[i] == a ? 1 : 0);
    }
  }
  std::uint32_t at(std::size_t a, std::size_t i) const { return cnt[a * (n + 1) + i]; }
  // prefix and suffix of length l of u[0, len) are Abelian equal
  bool border(std::size_t len, std::size_t l) const {
    // equal lengths: the last letter's count follows from the others
    for (std::size_t a = 0; a + 1 < sigma; ++a) {
      if (at(a, l) != at(a, len) - at(a, len - l)) return false;
    }
    return true;
  }
  bool border_free(std::size_t len) const {
    for (std::size_t l = 1; 2 * l <= len; ++l) {
      if (border(len, l)) return false;
    }
    return true;
  }
};

}  // namespace

BorderReport abelian_borders(const FiniteWord& u) {
  PrefixCounts pc(u.letters(), u.alphabet()->size());
  BorderReport r;
  r.length = u.size();
  for (std::size_t l = 1; 2 * l <= u.size(); ++l) {
    if (pc.border(u.size(), l)) r.borders.push_back(l);
  }
  r.border_free = r.borders.empty();
  return r;
}

bool has_abelian_border(const FiniteWord& u) {
  PrefixCounts pc(u.letters(), u.alphabet()->size());
  return !pc.border_free(u.size());
}

PrefixScan longest_ab_borderfree_prefix(const InfiniteWord& x, std::size_t horizon) {
  if (horizon == 0) throw DomainError("horizon must be positive");
  auto u = x.letters(horizon);
  PrefixCounts pc(u, x.alphabet()->size());
  PrefixScan s;
  s.horizon = horizon;
  for (std::size_t n = 1; n <= horizon; ++n) {
    if (pc.border_free(n)) s.length = n;
  }
  s.saturated = 2 * s.length > horizon;
  return s;
}

PrefixScan longest_borderfree_prefix(const InfiniteWord& x, std::size_t horizon) {
  if (horizon == 0) throw DomainError("horizon must be positive");
  auto u = x.letters(horizon);
  std::vector<std::size_t> fail(horizon, 0);
  PrefixScan s;
  s.horizon = horizon;
  s.length = 1;
  for (std::size_t i = 1; i < horizon; ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && u[i] != u[k]) k = fail[k - 1];
    if (u[i] == u[k]) ++k;
    fail[i] = k;
    if (k == 0) s.length = i + 1;
  }
  s.saturated = 2 * s.length > horizon;
  return s;
}

LyndonReport lyndon_status(const InfiniteWord& x, const std::vector<Letter>& order, std::size_t depth) {
  std::size_t sigma = x.alphabet()->size();
  std::vector<std::size_t> rank(sigma);
  if (order.empty()) {
    std::iota(rank.begin(), rank.end(), 0);
  } else {
    if (order.size() != sigma) throw DomainError("order must list every letter once");
    std::vector<bool> seen(sigma, false);
    for (std::size_t r = 0; r < order.size(); ++r) {
      if (order[r] >= sigma || seen[order[r]]) throw DomainError("order must list every letter once");
      seen[order[r]] = true;
      rank[order[r]] = r;
    }
  }
  LyndonReport rep;
  rep.depth = depth;
  // Eventually periodic words are decided exactly: past the preperiod a full
  // period of agreement means equality, and shifts repeat with the period.
  std::size_t shifts = depth, window = depth;
  if (auto per = x.periodicity()) {
    rep.exact = true;
    shifts = per->preperiod + per->period + 1;
    window = per->preperiod + per->period;
  }
  auto u = x.letters(shifts + window);
  for (std::size_t i = 1; i < shifts; ++i) {
    for (std::size_t j = 0; j < window; ++j) {
      std::size_t a = rank[u[j]], b = rank[u[i + j]];
      if (b < a) {
        rep.lyndon_consistent = false;
        rep.violator = i;
        return rep;
      }
      if (b > a) break;
      if (j + 1 == window && rep.exact) {
        // T^i x = x
        rep.lyndon_consistent = false;
        rep.violator = i;
        return rep;
      }
    }
  }
  return rep;
}

std::size_t lex_delay(const RotationPoint& p, std::size_t limit) {
  bool below = p.letter() == 0;
  RotationPoint q = p;
  for (std::size_t n = 1; n <= limit; ++n) {
    q = q.rotated();
    if (below ? q < p : q > p) return n;
  }
  throw DomainError("no lexicographic descent within " + std::to_string(limit) + " shifts");
}

std::size_t lex_delay_by_letters(const InfiniteWord& x, std::size_t limit) {
  std::size_t window = 4 * limit + 64;
  auto u = x.letters(limit + window);
  bool below = u[0] == 0;
  for (std::size_t n = 1; n <= limit; ++n) {
    for (std::size_t j = 0; j < window; ++j) {
      if (u[n + j] == u[j]) continue;
      if ((u[n + j] < u[j]) == below) return n;
      break;
    }
  }
  throw DomainError("no lexicographic descent within " + std::to_string(limit) + " shifts");
}

DelayReport shuffling_delay_sturmian(const QuadExt& alpha, const QuadExt& rho, std::size_t horizon, bool with_machine) {
  SturmianSpec{alpha, rho}.validate();
  if (rho.is_zero() || rho == QuadExt(1)) {
    throw DomainError("intercept must satisfy 0 < rho < 1; z(alpha, 0) and z(alpha, 1) are not self-shuffling");
  }
  InfiniteWord x = mechanical(alpha, rho);
  DelayReport r;
  auto ab = longest_ab_borderfree_prefix(x, horizon);
  if (ab.saturated) throw DomainError("horizon " + std::to_string(horizon) + " too small for the border scan");
  auto bf = longest_borderfree_prefix(x, horizon);
  r.ab_borderfree = ab.length;
  r.borderfree = bf.length;
  auto p = RotationPoint::from_intercept(alpha, rho);
  r.lex = lex_delay(p, horizon);
  if (with_machine) {
    std::shared_ptr<RotationMachine> m;
    sturmian_shuffle(p, p, p, &m);
    r.machine = machine_delay(*m, horizon);
  }
  bool agree = r.ab_borderfree == r.borderfree && r.borderfree == r.lex && (!r.machine || *r.machine == r.lex);
  if (!agree) {
    throw std::logic_error("delay quantities disagree for alpha=" + alpha.to_string() + " rho=" + rho.to_string() +
                           ": abelian-border-free " + std::to_string(r.ab_borderfree) + ", border-free " +
                           std::to_string(r.borderfree) + ", lex " + std::to_string(r.lex) + ", machine " +
                           (r.machine ? std::to_string(*r.machine) : std::string("-")));
  }
  r.delay = r.lex;
  return r;
}

}  // namespace selfshuffle
