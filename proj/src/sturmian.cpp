#include "selfshuffle/sturmian.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace selfshuffle {

void SturmianSpec::validate() const {
  if (alpha.is_rational()) throw DomainError("slope must be irrational, got " + alpha.to_string());
  if (alpha.sign() <= 0 || alpha >= QuadExt(1)) throw DomainError("slope must lie in (0,1)");
  if (rho.sign() < 0 || rho > QuadExt(1)) throw DomainError("intercept must lie in [0,1]");
  if (!rho.is_rational() && rho.d() != alpha.d()) throw DomainError("slope and intercept use different radicands");
}

InfiniteWord mechanical(const SturmianSpec& spec) {
  spec.validate();
  bool one = spec.rho == QuadExt(1);
  QuadExt alpha = spec.alpha;
  QuadExt start = one ? QuadExt(0) : spec.rho;
  struct Cursor {
    QuadExt v;
    std::int64_t fl;
  };
  auto cur = std::make_shared<Cursor>(Cursor{start, start.floor()});
  return InfiniteWord(Alphabet::binary(), [alpha, one, cur](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n) {
      cur->v += alpha;
      std::int64_t f = cur->v.floor();
      Letter z = static_cast<Letter>(f - cur->fl);
      cur->fl = f;
      if (one && out.empty()) z = 1;
      out.push_back(z);
    }
  });
}

InfiniteWord mechanical(const QuadExt& alpha, const QuadExt& rho) { return mechanical(SturmianSpec{alpha, rho}); }

// ---------------------------------------------------------------------------

bool in_backward_orbit(const QuadExt& p, const QuadExt& alpha) {
  QuadExt q = p.frac();
  if (q.is_zero()) return true;
  if (q.is_rational() || alpha.is_rational() || q.d() != alpha.d()) return false;
  // irrational parts: q.b/q.c == -n alpha.b/alpha.c
  __int128 num = -static_cast<__int128>(q.b()) * alpha.c();
  __int128 den = static_cast<__int128>(q.c()) * alpha.b();
  if (num % den != 0) return false;
  __int128 n = num / den;
  if (n < 1 || n > INT64_MAX) return false;
  return (-(QuadExt(static_cast<std::int64_t>(n)) * alpha)).frac() == q;
}

RotationPoint::RotationPoint(QuadExt alpha, const QuadExt& rho, bool left_limit)
    : alpha_(std::move(alpha)), value_(rho.frac()), left_(left_limit) {
  SturmianSpec{alpha_, value_}.validate();
  canonicalize();
}

RotationPoint RotationPoint::from_intercept(const QuadExt& alpha, const QuadExt& rho) {
  SturmianSpec{alpha, rho}.validate();
  if (rho == QuadExt(1)) return RotationPoint(alpha, QuadExt(0), true);
  return RotationPoint(alpha, rho, false);
}

void RotationPoint::canonicalize() {
  if (left_ && !in_backward_orbit(value_, alpha_)) left_ = false;
}

Letter RotationPoint::letter() const {
  QuadExt cut = QuadExt(1) - alpha_;
  if (left_) return (value_.is_zero() || value_ > cut) ? 1 : 0;
  return value_ >= cut ? 1 : 0;
}

RotationPoint RotationPoint::rotated() const {
  RotationPoint r = *this;
  r.value_ = (value_ + alpha_).frac();
  r.canonicalize();
  return r;
}

RotationPoint RotationPoint::rotated(std::size_t times) const {
  RotationPoint r = *this;
  r.value_ = (value_ + QuadExt(static_cast<std::int64_t>(times)) * alpha_).frac();
  r.canonicalize();
  return r;
}

RotationPoint RotationPoint::exchanged() const {
  RotationPoint r = *this;
  r.alpha_ = QuadExt(1) - alpha_;
  r.value_ = (-value_).frac();
  r.left_ = !left_;
  r.canonicalize();
  return r;
}

std::string RotationPoint::to_string() const { return value_.to_string() + (left_ ? "-" : ""); }

std::strong_ordering operator<=>(const RotationPoint& x, const RotationPoint& y) {
  if (!(x.alpha_ == y.alpha_)) throw DomainError("comparing trajectories of different slopes");
  // 0- codes 1C, the largest word of the slope
  bool xtop = x.left_ && x.value_.is_zero();
  bool ytop = y.left_ && y.value_.is_zero();
  if (xtop || ytop) {
    if (xtop && ytop) return std::strong_ordering::equal;
    return xtop ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (auto c = x.value_ <=> y.value_; c != 0) return c;
  if (x.left_ == y.left_) return std::strong_ordering::equal;
  return x.left_ ? std::strong_ordering::less : std::strong_ordering::greater;
}

InfiniteWord coding(const RotationPoint& p) {
  auto cur = std::make_shared<RotationPoint>(p);
  return InfiniteWord(Alphabet::binary(), [cur](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n) {
      out.push_back(cur->letter());
      *cur = cur->rotated();
    }
  });
}

std::strong_ordering lex_compare_by_letters(const RotationPoint& x, const RotationPoint& y, std::size_t limit) {
  RotationPoint a = x, b = y;
  for (std::size_t i = 0; i < limit; ++i) {
    if (a == b) return std::strong_ordering::equal;
    Letter la = a.letter(), lb = b.letter();
    if (la != lb) return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
    a = a.rotated();
    b = b.rotated();
  }
  throw std::logic_error("lex_compare_by_letters: no difference within limit");
}

// ---------------------------------------------------------------------------

FiniteWord pal_closure(const FiniteWord& u) {
  std::size_t n = u.size();
  if (n == 0) return u;
  // longest palindromic suffix of u = border of reverse(u) # u
  std::vector<int> s;
  s.reserve(2 * n + 1);
  for (std::size_t i = n; i-- > 0;) s.push_back(u[i]);
  s.push_back(-1);
  for (Letter a : u.letters()) s.push_back(a);
  std::vector<std::size_t> fail(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = fail[i - 1];
    while (k > 0 && s[i] != s[k]) k = fail[k - 1];
    if (s[i] == s[k]) ++k;
    fail[i] = k;
  }
  std::size_t lps = fail.back();
  FiniteWord out = u;
  for (std::size_t i = n - lps; i-- > 0;) out.push_back(u[i]);
  return out;
}

DirectiveSequence::DirectiveSequence(std::vector<Letter> prefix, std::vector<Letter> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  for (Letter a : prefix_) {
    if (a > 1) throw DomainError("directive letters must be 0 or 1");
  }
  for (Letter a : period_) {
    if (a > 1) throw DomainError("directive letters must be 0 or 1");
  }
}

DirectiveSequence DirectiveSequence::parse(std::string_view text) {
  std::vector<Letter> pre, per;
  bool in_period = false, closed = false;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (closed) throw ParseError("directive: text after ']'");
    if (ch == '[') {
      if (in_period) throw ParseError("directive: nested '['");
      in_period = true;
    } else if (ch == ']') {
      if (!in_period) throw ParseError("directive: ']' without '['");
      closed = true;
    } else if (ch == '0' || ch == '1') {
      (in_period ? per : pre).push_back(static_cast<Letter>(ch - '0'));
    } else {
      throw ParseError(std::string("directive: unexpected '") + ch + "'");
    }
  }
  if (in_period && !closed) throw ParseError("directive: missing ']'");
  if (in_period && per.empty()) throw ParseError("directive: empty period");
  if (pre.empty() && per.empty()) throw ParseError("directive: empty");
  return DirectiveSequence(std::move(pre), std::move(per));
}

Letter DirectiveSequence::at(std::size_t k) const {
  if (!has(k)) throw DomainError("directive index " + std::to_string(k) + " out of range");
  std::size_t i = k - 1;
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

std::optional<std::size_t> DirectiveSequence::occurrence(Letter a, std::size_t i) const {
  if (i == 0) throw DomainError("occurrence index starts at 1");
  bool possible = std::find(prefix_.begin(), prefix_.end(), a) != prefix_.end() ||
                  std::find(period_.begin(), period_.end(), a) != period_.end();
  if (!possible) return std::nullopt;
  std::size_t seen = 0;
  for (std::size_t k = 1; has(k); ++k) {
    if (at(k) == a && ++seen == i) return k;
  }
  return std::nullopt;
}

std::string DirectiveSequence::to_string() const {
  std::string s;
  for (Letter a : prefix_) s += (s.empty() ? "" : ",") + std::to_string(a);
  if (!period_.empty()) {
    s += s.empty() ? "[" : ",[";
    for (std::size_t i = 0; i < period_.size(); ++i) s += (i ? "," : "") + std::to_string(period_[i]);
    s += "]";
  }
  return s;
}

struct PalindromicConstruction::State {
  std::mutex mu;
  std::vector<Letter> buf;        // Phi(level)
  std::vector<std::size_t> lens{0};  // lens[k] = |Phi(k)|
  std::size_t last[2] = {0, 0};    // last k with a_k = a
};

PalindromicConstruction::PalindromicConstruction(DirectiveSequence dir)
    : dir_(std::move(dir)), state_(std::make_shared<State>()) {}

void PalindromicConstruction::ensure_level(std::size_t k) const {
  std::lock_guard lock(state_->mu);
  auto& st = *state_;
  while (st.lens.size() <= k) {
    std::size_t level = st.lens.size();  // computing Phi(level)
    if (!dir_.has(level)) throw DomainError("directive too short for level " + std::to_string(level));
    Letter a = dir_.at(level);
    std::size_t prev = st.lens.back();
    std::size_t from;
    if (st.last[a] == 0) {
      // a new letter: Pal(w a) = Pal(w) a Pal(w)
      st.buf.push_back(a);
      from = 0;
    } else {
      from = st.lens[st.last[a] - 1];
    }
    for (std::size_t i = from; i < prev; ++i) st.buf.push_back(st.buf[i]);
    st.last[a] = level;
    st.lens.push_back(st.buf.size());
  }
}

std::size_t PalindromicConstruction::phi_length(std::size_t k) const {
  ensure_level(k);
  std::lock_guard lock(state_->mu);
  return state_->lens[k];
}

FiniteWord PalindromicConstruction::phi(std::size_t k) const {
  ensure_level(k);
  std::lock_guard lock(state_->mu);
  auto& st = *state_;
  return FiniteWord(Alphabet::binary(), std::vector<Letter>(st.buf.begin(), st.buf.begin() + st.lens[k]));
}

FiniteWord PalindromicConstruction::block(std::size_t k) const {
  if (k == 0) throw DomainError("blocks w_k start at k = 1");
  ensure_level(k);
  std::lock_guard lock(state_->mu);
  auto& st = *state_;
  return FiniteWord(Alphabet::binary(),
                    std::vector<Letter>(st.buf.begin() + st.lens[k - 1], st.buf.begin() + st.lens[k]));
}

std::size_t PalindromicConstruction::level_for_length(std::size_t n) const {
  // |Phi(k)| >= k, so this terminates
  std::size_t k = 0;
  while (phi_length(k) < n) ++k;
  return k;
}

InfiniteWord PalindromicConstruction::word() const {
  PalindromicConstruction self = *this;
  return InfiniteWord(Alphabet::binary(), [self](std::vector<Letter>& out, std::size_t n) {
    std::size_t k = self.level_for_length(n);
    auto w = self.phi(k);
    out = w.letters();
  });
}

InfiniteWord characteristic_from_directive(const DirectiveSequence& dir) { return PalindromicConstruction(dir).word(); }

FiniteWord directive_blocks(const DirectiveSequence& dir, std::size_t k) { return PalindromicConstruction(dir).block(k); }

QuadExt slope_from_directive(const DirectiveSequence& dir) {
  if (dir.finite()) throw DomainError("slope needs an eventually periodic directive");
  const auto& per = dir.period();
  if (std::all_of(per.begin(), per.end(), [&](Letter a) { return a == per[0]; })) {
    throw DomainError("directive with constant tail gives no Sturmian slope");
  }
  std::size_t p = per.size(), pre = dir.prefix().size();
  // first run boundary t >= pre + 2 (1-based): a_t != a_{t-1}; runs from t on repeat every p letters
  std::size_t t = std::max<std::size_t>(pre + 1, 2);
  while (dir.at(t) == dir.at(t - 1)) ++t;
  auto runs = [&](std::size_t from, std::size_t to) {  // run lengths of a_from..a_{to-1}
    std::vector<std::int64_t> r;
    std::size_t start = from;
    for (std::size_t k = from + 1; k <= to; ++k) {
      if (k == to || dir.at(k) != dir.at(k - 1)) {
        r.push_back(static_cast<std::int64_t>(k - start));
        start = k;
      }
    }
    return r;
  };
  std::vector<std::int64_t> head = runs(1, t), cycle = runs(t, t + p);
  // alpha = [0; d1 + 1, d2, ...] when a_1 = 0 and [0; 1, d1, d2, ...] when a_1 = 1
  if (dir.at(1) == 0) {
    head[0] += 1;
  } else {
    head.insert(head.begin(), 1);
  }
  // beta = [cycle; beta]: beta = (A beta + B)/(C beta + D)
  std::int64_t A = 1, B = 0, C = 0, D = 1;
  for (std::int64_t r : cycle) {
    std::int64_t nA = A * r + B, nC = C * r + D;
    B = A;
    D = C;
    A = nA;
    C = nC;
  }
  // C beta^2 + (D - A) beta - B = 0, beta > 1
  QuadExt disc = QuadExt::sqrt_of((A - D) * (A - D) + 4 * B * C);
  QuadExt x = (QuadExt(A - D) + disc) / QuadExt(2 * C);
  for (std::size_t i = head.size(); i-- > 0;) x = QuadExt(head[i]) + QuadExt(1) / x;
  return QuadExt(1) / x;
}

std::vector<std::size_t> zero_runs(const InfiniteWord& x, std::size_t count, std::size_t horizon) {
  std::vector<std::size_t> k;
  auto letters = x.letters(horizon);
  std::size_t run = 0;
  for (Letter a : letters) {
    if (a == 0) {
      ++run;
    } else {
      k.push_back(run);
      run = 0;
      if (k.size() == count) return k;
    }
  }
  throw DomainError("only " + std::to_string(k.size()) + " zero runs within horizon " + std::to_string(horizon));
}

}  // namespace selfshuffle
