#include "selfshuffle/constructive.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace selfshuffle {

namespace {

// One run of a steering word: `length` letters of `copy`.
struct Segment {
  Letter copy;
  std::size_t length;
};

// Steering word built from consecutive groups of segments. `next(i)` returns
// the segments of group i; an empty optional ends the (finite) word.
using SegmentSource = std::function<std::optional<std::vector<Segment>>(std::size_t)>;

InfiniteWord segment_steering(std::size_t k, SegmentSource next) {
  auto group = std::make_shared<std::size_t>(0);
  auto done = std::make_shared<bool>(false);
  return InfiniteWord(Alphabet::steering(k), [k, next, group, done](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n && !*done) {
      auto segs = next((*group)++);
      if (!segs) {
        *done = true;
        break;
      }
      for (const Segment& s : *segs) {
        if (s.copy >= k) throw std::logic_error("segment copy out of range");
        out.insert(out.end(), s.length, s.copy);
      }
    }
  });
}

FiniteWord word_of(std::string_view text) { return FiniteWord::parse(text); }

FiniteWord complement(const FiniteWord& w) {
  FiniteWord r = w;
  for (auto& a : r.letters()) a = static_cast<Letter>(1 - a);
  return r;
}

}  // namespace

// ----- Thue-Morse -----------------------------------------------------------

namespace thue_morse {

Morphism sigma() {
  return Morphism(Alphabet::range(1, 4), Alphabet::range(1, 4), {{0, 1}, {2, 0}, {2, 3}, {0, 2}});
}

FiniteWord u() { return word_of("01101"); }
FiniteWord v() { return word_of("001"); }

namespace {
Morphism from_blocks(const std::vector<FiniteWord>& blocks) {
  std::vector<std::vector<Letter>> images;
  for (const auto& b : blocks) images.push_back(b.letters());
  return Morphism(Alphabet::range(1, 4), Alphabet::binary(), std::move(images));
}
}  // namespace

Morphism g() {
  FiniteWord uu = u(), vv = v(), ub = complement(uu), vb = complement(vv);
  return from_blocks({vv + ub, vb + ub, vb + uu, vv + uu});
}

Morphism h() {
  FiniteWord uu = u(), vv = v(), ub = complement(uu), vb = complement(vv);
  return from_blocks({uu + vv, ub + vb, ub + vb, uu + vv});
}

const std::vector<std::size_t>& piece_lengths(Letter a) {
  static const std::vector<std::size_t> odd{1, 3, 1, 3, 2, 2, 4};
  static const std::vector<std::size_t> even{1, 3, 1, 1, 3, 4, 3};
  if (a > 3) throw DomainError("letter outside 1..4");
  return (a % 2 == 0) ? odd : even;
}

}  // namespace thue_morse

ShuffleWitness tm_shuffle() {
  InfiniteWord w = fixed_point(thue_morse::sigma(), 0);
  ShuffleWitness out;
  out.word = words::thue_morse();
  out.steering = segment_steering(2, [w](std::size_t i) -> std::optional<std::vector<Segment>> {
    const auto& lengths = thue_morse::piece_lengths(w.at(i));
    std::vector<Segment> segs;
    for (std::size_t t = 0; t < lengths.size(); ++t) {
      std::size_t len = lengths[t] + (i == 0 && t == 0 ? thue_morse::u().size() : 0);
      segs.push_back({static_cast<Letter>(t % 2), len});
    }
    return segs;
  });
  out.label = "thue-morse";
  return out;
}

// ----- small explicit witnesses -----------------------------------------------

ShuffleWitness fibonacci_shuffle() {
  ShuffleWitness out;
  out.word = words::fibonacci();
  out.steering = map_letters(drop(words::fibonacci(), 2), Alphabet::steering(2), {0, 1});
  out.label = "fibonacci";
  return out;
}

ShuffleWitness period_doubling_shuffle() {
  ShuffleWitness out;
  out.word = words::period_doubling();
  out.steering = segment_steering(2, [](std::size_t i) -> std::optional<std::vector<Segment>> {
    if (i == 0) return std::vector<Segment>{{0, 4}, {1, 2}};
    if (i > 60) throw DomainError("period-doubling steering exhausted");
    return std::vector<Segment>{{0, std::size_t{1} << (i + 1)}, {1, std::size_t{1} << i}};
  });
  out.label = "period-doubling";
  return out;
}

ShuffleWitness full_complexity_shuffle() {
  ShuffleWitness out;
  out.word = words::full_complexity();
  out.steering = segment_steering(2, [](std::size_t i) -> std::optional<std::vector<Segment>> {
    // group 0 emits X_0 X_1; group i >= 1 emits X_{i+1} from X_i in each copy
    if (i == 0) return std::vector<Segment>{{0, 2}, {1, 2}};
    std::vector<Letter> steer;
    if (i == 1) {
      auto s = find_shuffle(full_complexity::block(2), full_complexity::block(1), full_complexity::block(1));
      if (!s) throw std::logic_error("X_2 is not a shuffle of X_1");
      steer = *s;
    } else {
      if (i > 28) throw DomainError("full-complexity steering exhausted");
      steer.assign(std::size_t{1} << (i + 1), 1);
      for (std::size_t p : full_complexity::index_set(i)) steer.at(p) = 0;
    }
    std::vector<Segment> segs;
    for (Letter c : steer) segs.push_back({c, 1});
    return segs;
  });
  out.label = "full-complexity";
  return out;
}

namespace three_shuffle {

FiniteWord block(std::size_t copy, std::size_t i) {
  if (copy > 2) throw DomainError("three-shuffle copy out of range");
  static const Morphism sigma = Morphism::parse("0:0001,1:0101");
  const FiniteWord s0 = word_of("0001");
  auto strip = [&](const FiniteWord& w) {
    if (!w.has_prefix(s0)) throw std::logic_error("block does not start with sigma(0)");
    return w.slice(s0.size(), w.size() - s0.size());
  };
  if (i == 0) return word_of(copy == 2 ? "01" : "0100");
  if (i == 1) return copy == 2 ? s0 + s0 : word_of("01");
  std::size_t j = i - 2, q = j / 4, r = j % 4;
  auto pw = [&](std::string_view w, std::size_t t) { return sigma.power(word_of(w), t); };
  FiniteWord empty;
  switch (r) {
    case 0:
      return copy == 1 ? strip(pw("0", q + 1)) : empty;
    case 1:
      if (copy == 0) return pw("0100", q + 1);
      if (copy == 1) return s0;
      return strip(pw("01", q + 1));
    case 2:
      if (copy == 0) return s0;
      if (copy == 1) return strip(pw("01", q + 1)) + s0;
      return empty;
    default:
      if (copy == 0) return strip(pw("01", q + 1));
      if (copy == 1) return empty;
      return pw("0", q + 2) + s0;
  }
}

}  // namespace three_shuffle

ShuffleWitness three_shuffle_example() {
  ShuffleWitness out;
  out.word = words::three_shuffle_example();
  out.k = 3;
  out.steering = segment_steering(3, [](std::size_t i) -> std::optional<std::vector<Segment>> {
    if (i > 40) throw DomainError("three-shuffle steering exhausted");
    std::vector<Segment> segs;
    for (Letter c = 0; c < 3; ++c) segs.push_back({c, three_shuffle::block(c, i).size()});
    return segs;
  });
  out.label = "three-shuffle-example";
  return out;
}

// ----- Sturmian rotation machine ------------------------------------------------

std::string case_name(RotationCase c) {
  switch (c) {
    case RotationCase::c1_1: return "1.1";
    case RotationCase::c1_2: return "1.2";
    case RotationCase::c2_1: return "2.1";
    case RotationCase::c2_2: return "2.2";
    case RotationCase::c3_1: return "3.1";
    case RotationCase::c3_2: return "3.2";
    case RotationCase::c4: return "4";
    case RotationCase::c5: return "5";
    case RotationCase::c6_1: return "6.1";
    case RotationCase::c6_2: return "6.2";
  }
  return "?";
}

bool is_machine_edge(RotationCase from, RotationCase to) {
  using C = RotationCase;
  switch (from) {
    case C::c1_2: return to == C::c1_1;
    case C::c1_1: return to == C::c2_1;
    case C::c2_1: return to == C::c3_1 || to == C::c3_2 || to == C::c4;
    case C::c3_1: return to == C::c2_1 || to == C::c2_2 || to == C::c5;
    case C::c3_2: return to == C::c1_1;
    case C::c4: return to == C::c1_1 || to == C::c1_2;
    case C::c5: return to == C::c6_1 || to == C::c6_2;
    case C::c2_2: return to == C::c6_1;
    case C::c6_1: return to == C::c3_1;
    case C::c6_2: return to == C::c6_1;
  }
  return false;
}

namespace {

// intercept of a trajectory: the left limit at 0 is rho = 1
QuadExt rho_of(const RotationPoint& p) {
  return (p.left_limit() && p.value().is_zero()) ? QuadExt(1) : p.value();
}

QuadExt mod1(const QuadExt& x) { return x.frac(); }

}  // namespace

RotationMachine::RotationMachine(const RotationPoint& S, const RotationPoint& M, const RotationPoint& L)
    : s_{S, 0}, m_{M, -1}, l_{L, 1}, alpha_(S.alpha()) {
  if (!(M.alpha() == alpha_ && L.alpha() == alpha_)) throw DomainError("trajectories of different slopes");
  if (!(S <= M && M <= L)) throw DomainError("trajectories must satisfy S <= M <= L lexicographically");
  if (S == M && M == L) {
    QuadExt r = rho_of(M);
    if (r.is_zero() || r == QuadExt(1)) throw DomainError("a Sturmian word self-shuffles only when its intercept rho satisfies rho != 0 (rho = 0 and rho = 1 code 0C and 1C)");
  }
  if (alpha_ > QuadExt::rational(1, 2)) {
    exchanged_ = true;
    s_ = Track{L.exchanged(), 1};
    m_ = Track{M.exchanged(), -1};
    l_ = Track{S.exchanged(), 0};
    alpha_ = s_.p.alpha();
  }
  case_ = classify();
  if (case_ == RotationCase::c4 || case_ == RotationCase::c5) throw std::logic_error("machine cannot start in case 4 or 5");
  check_state(case_);
  initial_ = case_;
}

RotationCase RotationMachine::classify() const {
  using C = RotationCase;
  Letter a = s_.p.letter(), b = m_.p.letter(), c = l_.p.letter();
  auto fail = [&](const char* why) {
    throw std::logic_error(std::string("rotation machine left its invariant: ") + why + " at s=" + s_.p.to_string() +
                           " m=" + m_.p.to_string() + " l=" + l_.p.to_string());
  };
  if (a == 0 && b == 0 && c == 0) {
    if (!(s_.p <= m_.p && m_.p <= l_.p)) fail("order in region 0");
    return m_.p == l_.p ? C::c1_2 : C::c1_1;
  }
  if (a == 0 && b == 0 && c == 1) {
    if (s_.p == m_.p) return C::c2_2;
    return s_.p < m_.p ? C::c2_1 : C::c5;
  }
  if (a == 0 && b == 1 && c == 1) {
    if (m_.p == l_.p) return C::c3_2;
    return m_.p < l_.p ? C::c3_1 : C::c4;
  }
  if (a == 1 && b == 1 && c == 1) {
    if (!(s_.p <= m_.p && m_.p <= l_.p)) fail("order in region 1");
    return s_.p == m_.p ? C::c6_2 : C::c6_1;
  }
  fail("letter pattern");
  return C::c1_1;
}

void RotationMachine::check_state(RotationCase c) const {
  QuadExt rs = rho_of(s_.p), rm = rho_of(m_.p), rl = rho_of(l_.p);
  QuadExt one(1);
  bool cond_c = (rm == rs && rl.is_zero()) || (rm == rl && rs.is_zero());
  auto fail = [&](const char* why) {
    throw std::logic_error("rotation machine state " + case_name(c) + " violates " + why);
  };
  if (c == RotationCase::c4) {
    bool p1 = rs == alpha_ && rm.is_zero() && rl == one - alpha_;
    if (rs < alpha_) fail("rho(s) >= alpha");
    if (p1) fail("not P1");
  } else if (c == RotationCase::c5) {
    QuadExt gap = mod1(rl - rm);
    bool p2 = (gap == alpha_ && rs == one - alpha_) || rm.is_zero();
    if (gap > alpha_) fail("(rho(l) - rho(m)) mod 1 <= alpha");
    if (p2) fail("not P2");
  } else if (cond_c) {
    fail("not C");
  }
}

void RotationMachine::follow(Track& f) {
  if (f.p.letter() != m_.p.letter()) throw std::logic_error("followed trajectory disagrees with m");
  steering_.push_back(static_cast<Letter>(f.copy));
  f.p = f.p.rotated();
  m_.p = m_.p.rotated();
  ++f.consumed;
  ++m_.consumed;
}

void RotationMachine::phase() {
  using C = RotationCase;
  RotationCase from = case_;
  std::size_t before = steering_.size();
  auto guard = [&] {
    if (steering_.size() - before > max_phase_steps) throw DomainError("rotation machine phase exceeded its step limit");
  };
  auto value_between = [&] {
    QuadExt rm = rho_of(m_.p), rl = rho_of(l_.p), rs = rho_of(s_.p);
    return rm.sign() >= 0 && rm == rl && rm < rs;
  };
  auto value_above = [&] {
    QuadExt rm = rho_of(m_.p), rl = rho_of(l_.p), rs = rho_of(s_.p);
    return rm == rs && rm > rl;
  };
  switch (case_) {
    case C::c1_1:
    case C::c3_1:
      while (l_.p.letter() == m_.p.letter()) follow(l_), guard();
      break;
    case C::c2_1:
    case C::c6_1:
      while (s_.p.letter() == m_.p.letter()) follow(s_), guard();
      break;
    case C::c1_2:
    case C::c3_2:
      do follow(l_), guard();
      while (!value_between());
      std::swap(s_, l_);
      break;
    case C::c2_2:
    case C::c6_2:
      do follow(s_), guard();
      while (!value_above());
      std::swap(s_, l_);
      break;
    case C::c4:
      follow(l_);
      std::swap(s_, l_);
      break;
    case C::c5:
      follow(s_);
      std::swap(s_, l_);
      break;
  }
  case_ = classify();
  if (!is_machine_edge(from, case_)) {
    throw std::logic_error("rotation machine took a non-edge " + case_name(from) + " -> " + case_name(case_));
  }
  check_state(case_);
  trace_.push_back({from, case_, steering_.size() - before, s_.consumed, m_.consumed, l_.consumed});
}

void RotationMachine::run(std::size_t n) {
  // every two consecutive phases must emit at least one letter
  while (steering_.size() < n) {
    std::size_t before = steering_.size();
    phase();
    if (steering_.size() == before) phase();
    if (steering_.size() == before) throw std::logic_error("rotation machine made no progress in two phases");
  }
}

ShuffleWitness sturmian_shuffle(const RotationPoint& S, const RotationPoint& M, const RotationPoint& L,
                                std::shared_ptr<RotationMachine>* machine) {
  auto mach = std::make_shared<RotationMachine>(S, M, L);
  if (machine) *machine = mach;
  ShuffleWitness out;
  out.word = coding(M);
  if (!(S == M && M == L)) out.sources = {coding(S), coding(L)};
  out.steering = InfiniteWord(Alphabet::steering(2), [mach](std::vector<Letter>& v, std::size_t n) {
    mach->run(n);
    const auto& st = mach->steering();
    v.insert(v.end(), st.begin() + static_cast<std::ptrdiff_t>(v.size()), st.end());
  });
  out.label = "sturmian";
  return out;
}

ShuffleWitness sturmian_shuffle(const QuadExt& alpha, const QuadExt& rho_s, const QuadExt& rho_m,
                                const QuadExt& rho_l, std::shared_ptr<RotationMachine>* machine) {
  return sturmian_shuffle(RotationPoint::from_intercept(alpha, rho_s), RotationPoint::from_intercept(alpha, rho_m),
                          RotationPoint::from_intercept(alpha, rho_l), machine);
}

std::size_t machine_delay(RotationMachine& machine, std::size_t limit) {
  for (std::size_t n = 1;; n = std::min(limit, 2 * n)) {
    machine.run(n);
    const auto& st = machine.steering();
    for (std::size_t i = 1; i < st.size() && i < limit; ++i) {
      if (st[i] != st[0]) return i;
    }
    if (n >= limit) throw DomainError("steering uses a single copy up to the limit");
  }
}

// ----- characteristic words -------------------------------------------------------

struct CharacteristicShuffle::State {
  std::mutex mu;
  std::vector<std::size_t> ks;
  std::size_t scanned = 0;
  std::size_t run = 0;
  std::size_t horizon = 0;
};

CharacteristicShuffle::CharacteristicShuffle(InfiniteWord x, std::size_t scan_horizon)
    : x_(std::move(x)), state_(std::make_shared<State>()) {
  state_->horizon = scan_horizon;
}

std::size_t CharacteristicShuffle::k(std::size_t i) const {
  if (i == 0) throw DomainError("k_i starts at i = 1");
  std::lock_guard lock(state_->mu);
  State& st = *state_;
  while (st.ks.size() < i) {
    if (st.scanned >= st.horizon) throw DomainError("zero run k_" + std::to_string(i) + " not found within the scan horizon");
    std::size_t chunk = std::min<std::size_t>(st.horizon, std::max<std::size_t>(2 * st.scanned, 1024));
    auto letters = x_.letters(chunk);
    for (; st.scanned < chunk && st.ks.size() < i; ++st.scanned) {
      if (letters[st.scanned] == 0) {
        ++st.run;
      } else {
        st.ks.push_back(st.run);
        st.run = 0;
      }
    }
  }
  return st.ks[i - 1];
}

long long CharacteristicShuffle::sum(std::size_t from, std::size_t to) const {
  long long s = 0;
  for (std::size_t i = from; i <= to; ++i) s += static_cast<long long>(k(i));
  return s;
}

CharacteristicTerms CharacteristicShuffle::terms(std::size_t n) const {
  if (n == 0) throw DomainError("terms start at n = 1");
  long long k1 = static_cast<long long>(k(1));
  CharacteristicTerms t{};
  t.u1 = n <= 2 ? k1 : sum(1, n - 1) - sum(n + 1, 2 * n - 2);
  t.v1 = sum(n + 1, 2 * n) - sum(1, n);
  t.u2 = n == 1 ? k1 : sum(1, n) - sum(n + 1, 2 * n - 1);
  t.v2 = sum(n + 2, 2 * n + 1) - sum(1, n);
  return t;
}

ShuffleWitness characteristic_shuffle(const InfiniteWord& x) {
  CharacteristicShuffle cs(x);
  ShuffleWitness out;
  out.word = x;
  out.steering = segment_steering(2, [cs](std::size_t i) -> std::optional<std::vector<Segment>> {
    auto t = cs.terms(i + 1);
    if (t.u1 < 0 || t.v1 < 0 || t.u2 < 0 || t.v2 < 0) {
      throw DomainError("negative block length at n = " + std::to_string(i + 1) + "; the word is not of the required form");
    }
    return std::vector<Segment>{{0, static_cast<std::size_t>(t.u1 + 1 + t.v1)},
                                {1, static_cast<std::size_t>(t.u2 + 1 + t.v2)}};
  });
  out.label = "characteristic";
  return out;
}

// ----- palindromic shuffles of 01C and 10C -------------------------------------------

namespace {

SegmentSource pal_segments(const DirectiveSequence& dir, PalVariant variant) {
  if (!dir.has(1) || dir.at(1) != 0) throw DomainError("directive must begin with 0");
  PalindromicConstruction pc(dir);
  auto len = [pc](std::size_t k) { return pc.phi_length(k) - pc.phi_length(k - 1); };
  if (variant == PalVariant::c01) {
    return [dir, len](std::size_t t) -> std::optional<std::vector<Segment>> {
      if (t == 0) return std::vector<Segment>{{0, 2}};
      if (!dir.has(t)) return std::nullopt;
      Letter copy = t == 1 ? 1 : dir.at(t);
      return std::vector<Segment>{{copy, len(t)}};
    };
  }
  auto first_one = dir.occurrence(1, 1);
  if (!first_one) throw DomainError("directive has no letter 1");
  std::size_t k1 = *first_one;
  return [dir, len, k1](std::size_t t) -> std::optional<std::vector<Segment>> {
    if (t == 0) return std::vector<Segment>{{0, 1 + k1}};
    std::size_t k = k1 + t - 1;
    if (!dir.has(k)) return std::nullopt;
    Letter copy = t == 1 ? 1 : static_cast<Letter>(1 - dir.at(k));
    return std::vector<Segment>{{copy, len(k)}};
  };
}

}  // namespace

InfiniteWord pal_word(const DirectiveSequence& dir, PalVariant variant) {
  return prepend(word_of(variant == PalVariant::c01 ? "01" : "10"), characteristic_from_directive(dir));
}

ShuffleWitness pal_shuffle(const DirectiveSequence& dir, PalVariant variant) {
  ShuffleWitness out;
  out.word = pal_word(dir, variant);
  out.steering = segment_steering(2, pal_segments(dir, variant));
  out.label = variant == PalVariant::c01 ? "pal-01" : "pal-10";
  return out;
}

std::vector<PalBlock> pal_display_blocks(const DirectiveSequence& dir, PalVariant variant, std::size_t count) {
  auto next = pal_segments(dir, variant);
  std::vector<Segment> runs;
  constexpr std::size_t scan_limit = std::size_t{1} << 22;
  std::size_t scanned = 0;
  // one extra run so the last displayed one is complete; a run still growing
  // at the scan limit (e.g. a constant directive tail) is not displayed
  for (std::size_t t = 0; runs.size() <= count; ++t) {
    auto segs = next(t);
    if (!segs) {
      break;
    }
    if (scanned > scan_limit) {
      runs.pop_back();
      break;
    }
    for (const Segment& s : *segs) scanned += s.length;
    for (const Segment& s : *segs) {
      if (!runs.empty() && runs.back().copy == s.copy) {
        runs.back().length += s.length;
      } else {
        runs.push_back(s);
      }
    }
  }
  if (runs.size() > count) runs.resize(count);
  std::size_t total = 0;
  for (const auto& r : runs) total += r.length;
  FiniteWord w = pal_word(dir, variant).prefix(total);
  std::vector<PalBlock> out;
  std::size_t pos = 0;
  for (const auto& r : runs) {
    out.push_back({r.copy, w.slice(pos, r.length)});
    pos += r.length;
  }
  return out;
}

}  // namespace selfshuffle
