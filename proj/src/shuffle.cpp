#include "selfshuffle/shuffle.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <numeric>

namespace selfshuffle {

InfiniteWord finite_steering(std::vector<Letter> steering, std::size_t k) {
  for (Letter c : steering) {
    if (c >= k) throw DomainError("steering letter outside 1.." + std::to_string(k));
  }
  auto data = std::make_shared<const std::vector<Letter>>(std::move(steering));
  // may stop short of n; InfiniteWord reports reads past the end
  return InfiniteWord(Alphabet::steering(k), [data](std::vector<Letter>& out, std::size_t n) {
    out.assign(data->begin(), data->begin() + std::min(n, data->size()));
  });
}

InfiniteWord parse_steering(std::string_view text, std::size_t k) {
  std::vector<Letter> s;
  for (char ch : text) {
    if (ch < '1' || ch > '9' || static_cast<std::size_t>(ch - '1') >= k) {
      throw ParseError(std::string("steering symbol '") + ch + "' not in 1.." + std::to_string(k));
    }
    s.push_back(static_cast<Letter>(ch - '1'));
  }
  return finite_steering(std::move(s), k);
}

std::vector<std::size_t> VerifyReport::starved() const {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < consumed.size(); ++j) {
    if (consumed[j] == 0) s.push_back(j);
  }
  return s;
}

InfiniteWord interleave(std::vector<InfiniteWord> sources, InfiniteWord steering) {
  if (sources.size() < 2) throw DomainError("interleave needs at least two sources");
  if (steering.alphabet()->size() != sources.size()) throw DomainError("steering alphabet does not match the number of sources");
  struct Cursor {
    std::vector<std::size_t> used;
  };
  auto cur = std::make_shared<Cursor>(Cursor{std::vector<std::size_t>(sources.size(), 0)});
  auto alphabet = sources[0].alphabet();
  return InfiniteWord(alphabet, [sources, steering, cur](std::vector<Letter>& out, std::size_t n) {
    std::vector<Letter> s;
    try {
      s = steering.letters(n);
    } catch (const DomainError&) {
      s = steering.letters(out.size());  // finite steering: grow letter by letter below
      while (true) {
        try {
          s.push_back(steering.at(s.size()));
        } catch (const DomainError&) {
          break;
        }
      }
    }
    while (out.size() < std::min(n, s.size())) {
      Letter c = s[out.size()];
      out.push_back(sources[c].at(cur->used[c]++));
    }
  });
}

FiniteWord interleave_finite(const std::vector<FiniteWord>& sources, std::span<const Letter> steering) {
  if (sources.empty()) throw DomainError("interleave needs sources");
  std::vector<std::size_t> used(sources.size(), 0);
  FiniteWord z(sources[0].alphabet());
  for (Letter c : steering) {
    if (c >= sources.size()) throw DomainError("steering letter outside range");
    if (used[c] >= sources[c].size()) throw DomainError("source " + std::to_string(c + 1) + " exhausted");
    z.push_back(sources[c][used[c]++]);
  }
  return z;
}

VerifyReport verify_shuffle(const InfiniteWord& target, const std::vector<InfiniteWord>& sources,
                            const InfiniteWord& steering, std::size_t depth) {
  VerifyReport rep;
  rep.depth = depth;
  rep.consumed.assign(sources.size(), 0);
  if (steering.alphabet()->size() != sources.size()) {
    rep.reason = "steering alphabet does not match the number of copies";
    return rep;
  }
  std::vector<Letter> s;
  try {
    s = steering.letters(depth);
  } catch (const DomainError& e) {
    rep.reason = e.what();
    return rep;
  }
  std::vector<std::size_t> need(sources.size(), 0);
  for (Letter c : s) ++need[c];
  auto x = target.letters(depth);
  std::vector<std::vector<Letter>> src;
  for (std::size_t j = 0; j < sources.size(); ++j) src.push_back(sources[j].letters(need[j]));
  for (std::size_t n = 0; n < depth; ++n) {
    Letter c = s[n];
    Letter a = src[c][rep.consumed[c]++];
    if (a != x[n]) {
      rep.mismatch = n;
      rep.reason = "position " + std::to_string(n) + ": copy " + std::to_string(c + 1) + " supplies " +
                   target.alphabet()->name(a) + ", word has " + target.alphabet()->name(x[n]);
      return rep;
    }
  }
  rep.ok = true;
  return rep;
}

VerifyReport verify_witness(const ShuffleWitness& w, std::size_t depth) {
  if (w.horizon && depth > *w.horizon) {
    VerifyReport rep;
    rep.depth = depth;
    rep.consumed.assign(w.k, 0);
    rep.reason = "witness only covers depth " + std::to_string(*w.horizon);
    return rep;
  }
  std::vector<InfiniteWord> sources;
  for (std::size_t j = 0; j < w.k; ++j) sources.push_back(w.source(j));
  return verify_shuffle(w.word, sources, w.steering, depth);
}

VerifyReport verify_witness(const InfiniteWord& x, const ShuffleWitness& w, std::size_t depth) {
  ShuffleWitness v = w;
  v.word = x;
  return verify_witness(v, depth);
}

std::optional<std::vector<Letter>> find_shuffle(const FiniteWord& z, const FiniteWord& u, const FiniteWord& v) {
  std::size_t a = u.size(), b = v.size();
  if (a + b != z.size()) return std::nullopt;
  // ok[i][j]: z[0, i+j) is a shuffle of u[0,i) and v[0,j)
  std::vector<std::vector<char>> ok(a + 1, std::vector<char>(b + 1, 0));
  ok[0][0] = 1;
  for (std::size_t i = 0; i <= a; ++i) {
    for (std::size_t j = 0; j <= b; ++j) {
      if (i == 0 && j == 0) continue;
      Letter c = z[i + j - 1];
      ok[i][j] = (i > 0 && ok[i - 1][j] && u[i - 1] == c) || (j > 0 && ok[i][j - 1] && v[j - 1] == c);
    }
  }
  if (!ok[a][b]) return std::nullopt;
  std::vector<Letter> s(a + b);
  std::size_t i = a, j = b;
  while (i + j > 0) {
    Letter c = z[i + j - 1];
    if (i > 0 && ok[i - 1][j] && u[i - 1] == c) {
      s[i + j - 1] = 0;
      --i;
    } else {
      s[i + j - 1] = 1;
      --j;
    }
  }
  return s;
}

SteeringConstruction steering_to_word(std::span<const Letter> steering, std::size_t depth) {
  if (depth > steering.size()) throw DomainError("steering prefix shorter than depth");
  if (depth == 0) throw DomainError("depth must be positive");
  SteeringConstruction out;
  Letter first = steering[0];
  std::size_t r = 0;
  while (r < depth && steering[r] == first) ++r;
  if (r == depth) throw DomainError("steering prefix is constant; the construction needs a second symbol");
  out.r = r;
  if (r > 26) throw DomainError("construction needs more than 26 letters");
  std::vector<std::size_t> count(256, 0);
  std::vector<std::size_t> parent(depth);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t n = 0; n < depth; ++n) {
    std::size_t l = ++count[steering[n]] - 1;
    out.ell.push_back(l);
    std::size_t a = find(n), b = find(l);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> label(depth, SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t n = 0; n < depth; ++n) {
    std::size_t root = find(n);
    if (label[root] == SIZE_MAX) label[root] = next++;
    out.klass.push_back(label[root]);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < next; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  auto alphabet = std::make_shared<const Alphabet>(std::move(names));
  std::vector<Letter> w;
  for (std::size_t c : out.klass) w.push_back(static_cast<Letter>(c));
  out.word = FiniteWord(alphabet, std::move(w));
  return out;
}

namespace {

InfiniteWord expand_steering(const InfiniteWord& steering, const InfiniteWord& x, std::vector<std::size_t> lengths,
                             std::size_t k) {
  struct Cursor {
    std::size_t read = 0;
  };
  auto cur = std::make_shared<Cursor>();
  return InfiniteWord(Alphabet::steering(k), [steering, x, lengths, cur](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n) {
      Letter c;
      try {
        c = steering.at(cur->read);
      } catch (const DomainError&) {
        return;  // finite steering: stop at its end
      }
      out.insert(out.end(), lengths[x.at(cur->read++)], c);
    }
  });
}

std::optional<std::size_t> expanded_horizon(const ShuffleWitness& w, const std::vector<std::size_t>& lengths) {
  if (!w.horizon) return std::nullopt;
  std::size_t h = 0;
  for (Letter a : w.word.letters(*w.horizon)) h += lengths[a];
  return h;
}

}  // namespace

ShuffleWitness morphic_transport(const ShuffleWitness& w, const Morphism& tau) {
  if (tau.is_erasing()) throw DomainError("transport needs a non-erasing morphism");
  if (!(*tau.domain() == *w.word.alphabet())) throw DomainError("morphism domain does not match the word");
  std::vector<std::size_t> lengths;
  for (std::size_t a = 0; a < tau.domain()->size(); ++a) lengths.push_back(tau.image(static_cast<Letter>(a)).size());
  ShuffleWitness out;
  out.k = w.k;
  out.word = tau.apply(w.word);
  for (const auto& s : w.sources) out.sources.push_back(tau.apply(s));
  out.steering = expand_steering(w.steering, w.word, lengths, w.k);
  out.horizon = expanded_horizon(w, lengths);
  out.label = w.label.empty() ? "transported" : w.label + " transported by " + tau.to_string();
  return out;
}

ShuffleWitness prefix_removal_transport(const ShuffleWitness& w, const Morphism& tau, std::size_t l,
                                        const FiniteWord& u) {
  if (!w.sources.empty()) throw DomainError("prefix removal needs a self-shuffle witness");
  if (l == 0) throw DomainError("power l must be positive");
  Morphism p = tau;
  for (std::size_t i = 1; i < l; ++i) p = p.compose(tau);
  for (std::size_t a = 0; a < p.domain()->size(); ++a) {
    FiniteWord im(p.codomain(), p.image(static_cast<Letter>(a)));
    if (!im.has_prefix(u)) throw DomainError("tau^l(" + p.domain()->name(static_cast<Letter>(a)) + ") does not begin with u");
  }
  auto x = w.word.letters(std::max<std::size_t>(64, 4 * u.size()));
  auto tx = p.apply(FiniteWord(w.word.alphabet(), x));
  if (!(tx.prefix(x.size()) == FiniteWord(w.word.alphabet(), x))) throw DomainError("word is not a fixed point of tau");
  // tau^l(x_n) = u V_n and u^{-1} x = prod (V_n u): the same block lengths as tau^l
  ShuffleWitness out = morphic_transport(w, p);
  out.word = drop(w.word, u.size());
  out.label = "u^-1 x with u = " + u.to_string();
  return out;
}

// ---------------------------------------------------------------------------

ParikhTable::ParikhTable(const FiniteWord& prefix) : n_(prefix.size()), sigma_(prefix.alphabet()->size()) {
  counts_.assign(sigma_ * (n_ + 1), 0);
  for (std::size_t a = 0; a < sigma_; ++a) {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      counts_[a * (n_ + 1) + i] = c;
      if (prefix[i] == a) ++c;
    }
    counts_[a * (n_ + 1) + n_] = c;
  }
}

bool ParikhTable::vertex2(std::size_t i, std::size_t j) const {
  std::size_t s = i + j;
  if (s > n_) throw DomainError("vertex beyond the tabulated prefix");
  // lengths agree automatically, so one letter can be skipped
  for (std::size_t a = 0; a + 1 < sigma_; ++a) {
    const std::uint32_t* c = &counts_[a * (n_ + 1)];
    if (c[i] + c[j] != c[s]) return false;
  }
  return true;
}

bool ParikhTable::vertex(std::span<const std::size_t> tuple) const {
  std::size_t s = std::accumulate(tuple.begin(), tuple.end(), std::size_t{0});
  if (s > n_) throw DomainError("vertex beyond the tabulated prefix");
  for (std::size_t a = 0; a + 1 < sigma_; ++a) {
    const std::uint32_t* c = &counts_[a * (n_ + 1)];
    std::size_t t = 0;
    for (std::size_t i : tuple) t += c[i];
    if (t != c[s]) return false;
  }
  return true;
}

ShuffleFrontier initial_frontier(std::size_t k) {
  if (k < 2) throw DomainError("k must be at least 2");
  ShuffleFrontier f;
  f.k = k;
  f.tuples.push_back(std::vector<std::size_t>(k, 0));
  return f;
}

ShuffleFrontier frontier_step(const ParikhTable& table, const ShuffleFrontier& f) {
  ShuffleFrontier g;
  g.k = f.k;
  g.level = f.level + 1;
  for (const auto& t : f.tuples) {
    for (std::size_t j = 0; j < f.k; ++j) {
      auto u = t;
      ++u[j];
      if (table.vertex(u)) g.tuples.push_back(std::move(u));
    }
  }
  std::sort(g.tuples.begin(), g.tuples.end());
  g.tuples.erase(std::unique(g.tuples.begin(), g.tuples.end()), g.tuples.end());
  return g;
}

ShuffleFrontier frontier_step(const InfiniteWord& x, const ShuffleFrontier& f) {
  return frontier_step(ParikhTable(x.prefix(f.level + 1)), f);
}

std::string SearchOutcome::kind_name() const {
  switch (kind) {
    case Kind::witness: return "witness";
    case Kind::dead: return "dead";
    case Kind::alive: return "alive";
  }
  return "?";
}

std::string SearchOutcome::death_name() const {
  switch (death) {
    case Death::none: return "none";
    case Death::empty_frontier: return "empty-frontier";
    case Death::starvation: return "starvation";
  }
  return "?";
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool test_bit(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set_bit(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

template <class F>
void for_each_bit(const Bits& b, F&& f) {
  for (std::size_t w = 0; w < b.size(); ++w) {
    std::uint64_t v = b[w];
    while (v) {
      f(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
      v &= v - 1;
    }
  }
}

// largest min(i, n - i) over the set; SIZE_MAX when empty
std::size_t best_min(const Bits& b, std::size_t n) {
  std::size_t best = SIZE_MAX;
  for_each_bit(b, [&](std::size_t i) {
    std::size_t m = std::min(i, n - i);
    if (best == SIZE_MAX || m > best) best = m;
  });
  return best;
}

// intermediate corridor floor n/(4k); the final level is held to depth/(2k)
std::size_t corridor_floor(std::size_t n, std::size_t k) { return (n + 4 * k - 1) / (4 * k); }

std::size_t corridor_begin(const SearchOptions& opt, std::size_t depth) {
  if (opt.strategy != SearchStrategy::corridor) return SIZE_MAX;
  double s = std::clamp(opt.corridor_start, 0.0, 1.0) * static_cast<double>(depth);
  return static_cast<std::size_t>(std::ceil(s));
}

}  // namespace

std::vector<std::vector<std::size_t>> lattice_levels(std::size_t depth, const VertexTest& vertex) {
  std::vector<std::vector<std::size_t>> levels;
  levels.push_back(vertex(0, 0) ? std::vector<std::size_t>{0} : std::vector<std::size_t>{});
  for (std::size_t n = 1; n <= depth; ++n) {
    std::vector<std::size_t> cand;
    for (std::size_t i : levels.back()) {
      cand.push_back(i);
      cand.push_back(i + 1);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::size_t> next;
    for (std::size_t i : cand) {
      if (vertex(i, n - i)) next.push_back(i);
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

SearchOutcome lattice_search(std::size_t depth, const VertexTest& vertex, const SearchOptions& opt) {
  constexpr std::size_t k = 2;
  SearchOutcome out;
  out.depth = depth;
  std::size_t begin = corridor_begin(opt, depth);
  std::vector<Bits> levels;
  std::vector<std::size_t> mins;  // best min coordinate per level, before pruning
  levels.emplace_back(1, 0);
  if (!vertex(0, 0)) {
    out.kind = SearchOutcome::Kind::dead;
    out.death = SearchOutcome::Death::empty_frontier;
    return out;
  }
  set_bit(levels[0], 0);
  mins.push_back(0);
  Bits raw{1};  // unpruned frontier; only its emptiness certifies death
  std::size_t stored_words = 1;
  out.max_frontier = 1;
  auto expand = [](const Bits& prev, std::size_t words) {
    // prev (copy 2 steps) | prev << 1 (copy 1 steps)
    Bits cand(words, 0);
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t p = w < prev.size() ? prev[w] : 0;
      cand[w] = p | (p << 1) | carry;
      carry = p >> 63;
    }
    return cand;
  };
  for (std::size_t n = 1; n <= depth; ++n) {
    const Bits& prev = levels.back();
    std::size_t words = (n + 1 + 63) / 64;
    stored_words += words;
    if (stored_words > opt.memory_budget) {
      out.kind = SearchOutcome::Kind::alive;
      out.truncated = true;
      out.level = n - 1;
      out.bound = mins.back();
      return out;
    }
    Bits raw_next(words, 0);
    bool raw_any = false;
    for_each_bit(expand(raw, words), [&](std::size_t i) {
      if (i <= n && vertex(i, n - i)) {
        set_bit(raw_next, i);
        raw_any = true;
      }
    });
    raw.swap(raw_next);
    if (!raw_any) {
      out.kind = SearchOutcome::Kind::dead;
      out.death = SearchOutcome::Death::empty_frontier;
      out.level = n;
      return out;
    }
    Bits next = expand(prev, words);
    std::size_t size = 0;
    for (std::size_t w = 0; w < words; ++w) {
      next[w] &= raw[w];
      size += static_cast<std::size_t>(std::popcount(next[w]));
    }
    if (size == 0) {
      // the corridor cut every path through this level
      out.kind = SearchOutcome::Kind::dead;
      out.death = SearchOutcome::Death::starvation;
      out.level = n;
      out.bound = 0;
      return out;
    }
    std::size_t m = best_min(next, n);
    mins.push_back(m);
    if (n >= begin) {
      std::size_t lo = corridor_floor(n, k);
      if (m < lo) {
        out.kind = SearchOutcome::Kind::dead;
        out.death = SearchOutcome::Death::starvation;
        out.level = n;
        out.bound = m;
        return out;
      }
      for (std::size_t i = 0; i < lo; ++i) next[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
      for (std::size_t i = n - lo + 1; i <= n; ++i) next[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
      size = 0;
      for (auto v : next) size += static_cast<std::size_t>(std::popcount(v));
    }
    out.max_frontier = std::max(out.max_frontier, size);
    levels.push_back(std::move(next));
  }
  const Bits& last = levels.back();
  std::size_t m = mins.back();
  out.final_frontier = 0;
  for (auto v : last) out.final_frontier += static_cast<std::size_t>(std::popcount(v));
  out.level = depth;
  out.bound = m;
  if (2 * k * m < depth) {
    // endpoint strategy only: report the deepest bottleneck of the second half
    std::size_t from = (depth + 1) / 2, at = depth;
    for (std::size_t n = from; n <= depth; ++n) {
      if (mins[n] <= mins[at]) at = n;
    }
    out.kind = SearchOutcome::Kind::dead;
    out.death = SearchOutcome::Death::starvation;
    out.level = at;
    out.bound = mins[at];
    return out;
  }
  // end vertex: most balanced, ties to the smaller i_1
  std::size_t end = SIZE_MAX;
  for_each_bit(last, [&](std::size_t i) {
    if (end == SIZE_MAX && std::min(i, depth - i) == m) end = i;
  });
  out.kind = SearchOutcome::Kind::witness;
  out.consumed = {end, depth - end};
  // co-reachable sets, then the lexicographically least steering word (copy 1 first)
  std::vector<Bits> co(depth + 1);
  co[depth].assign(levels[depth].size(), 0);
  set_bit(co[depth], end);
  for (std::size_t n = depth; n-- > 0;) {
    const Bits& nx = co[n + 1];
    Bits& c = co[n];
    c.assign(levels[n].size(), 0);
    for (std::size_t w = 0; w < c.size(); ++w) {
      std::uint64_t a = w < nx.size() ? nx[w] : 0, b = w + 1 < nx.size() ? nx[w + 1] : 0;
      c[w] = levels[n][w] & (a | (a >> 1) | (b << 63));
    }
  }
  out.steering.assign(depth, 0);
  std::size_t i = 0;
  for (std::size_t n = 0; n < depth; ++n) {
    if (test_bit(co[n + 1], i + 1)) {
      out.steering[n] = 0;
      ++i;
    } else {
      out.steering[n] = 1;
    }
  }
  return out;
}

namespace {

SearchOutcome general_search(const ParikhTable& table, std::size_t k, std::size_t depth, const SearchOptions& opt) {
  SearchOutcome out;
  out.depth = depth;
  std::size_t begin = corridor_begin(opt, depth);
  // levels[n]: flattened sorted tuples
  std::vector<std::vector<std::uint32_t>> levels;
  levels.emplace_back(k, 0);
  std::vector<std::size_t> mins{0};
  std::size_t stored = 1;
  out.max_frontier = 1;
  auto tuple_min = [&](const std::uint32_t* t) { return static_cast<std::size_t>(*std::min_element(t, t + k)); };
  for (std::size_t n = 1; n <= depth; ++n) {
    const auto& prev = levels.back();
    std::vector<std::vector<std::uint32_t>> cand;
    for (std::size_t p = 0; p < prev.size(); p += k) {
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::uint32_t> t(prev.begin() + p, prev.begin() + p + k);
        ++t[j];
        cand.push_back(std::move(t));
      }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<std::uint32_t> next;
    std::size_t m = 0, size = 0;
    std::vector<std::size_t> tup(k);
    for (const auto& t : cand) {
      std::copy(t.begin(), t.end(), tup.begin());
      if (!table.vertex(tup)) continue;
      next.insert(next.end(), t.begin(), t.end());
      m = std::max(m, tuple_min(t.data()));
      ++size;
    }
    if (size == 0) {
      // after pruning starts candidates come from the corridor only
      out.kind = SearchOutcome::Kind::dead;
      out.death = n > begin ? SearchOutcome::Death::starvation : SearchOutcome::Death::empty_frontier;
      out.level = n;
      return out;
    }
    mins.push_back(m);
    if (n >= begin) {
      std::size_t lo = corridor_floor(n, k);
      if (m < lo) {
        out.kind = SearchOutcome::Kind::dead;
        out.death = SearchOutcome::Death::starvation;
        out.level = n;
        out.bound = m;
        return out;
      }
      std::vector<std::uint32_t> kept;
      for (std::size_t p = 0; p < next.size(); p += k) {
        if (tuple_min(&next[p]) >= lo) kept.insert(kept.end(), next.begin() + p, next.begin() + p + k);
      }
      next.swap(kept);
      size = next.size() / k;
    }
    stored += size;
    if (stored > opt.memory_budget) {
      out.kind = SearchOutcome::Kind::alive;
      out.truncated = true;
      out.level = n;
      out.bound = m;
      return out;
    }
    out.max_frontier = std::max(out.max_frontier, size);
    levels.push_back(std::move(next));
  }
  const auto& last = levels.back();
  out.final_frontier = last.size() / k;
  std::size_t m = mins.back();
  out.level = depth;
  out.bound = m;
  if (2 * k * m < depth) {
    std::size_t from = (depth + 1) / 2, at = depth;
    for (std::size_t n = from; n <= depth; ++n) {
      if (mins[n] <= mins[at]) at = n;
    }
    out.kind = SearchOutcome::Kind::dead;
    out.death = SearchOutcome::Death::starvation;
    out.level = at;
    out.bound = mins[at];
    return out;
  }
  std::vector<std::uint32_t> cur;
  for (std::size_t p = 0; p < last.size(); p += k) {
    if (tuple_min(&last[p]) == m) {
      cur.assign(last.begin() + p, last.begin() + p + k);
      break;
    }
  }
  out.kind = SearchOutcome::Kind::witness;
  out.consumed.assign(cur.begin(), cur.end());
  out.steering.assign(depth, 0);
  for (std::size_t n = depth; n > 0; --n) {
    const auto& p = levels[n - 1];
    bool moved = false;
    for (std::size_t j = 0; j < k && !moved; ++j) {
      if (cur[j] == 0) continue;
      auto t = cur;
      --t[j];
      // binary search over the flattened sorted tuples
      std::size_t lo = 0, hi = p.size() / k;
      while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (std::lexicographical_compare(p.begin() + mid * k, p.begin() + mid * k + k, t.begin(), t.end())) {
          lo = mid + 1;
        } else {
          hi = mid;
        }
      }
      if (lo < p.size() / k && std::equal(t.begin(), t.end(), p.begin() + lo * k)) {
        out.steering[n - 1] = static_cast<Letter>(j);
        cur = t;
        moved = true;
      }
    }
    if (!moved) throw std::logic_error("witness backtracking lost the path");
  }
  return out;
}

}  // namespace

SearchOutcome search_self_shuffle(const InfiniteWord& x, std::size_t k, std::size_t depth, const SearchOptions& opt) {
  if (k < 2) throw DomainError("k must be at least 2");
  if (depth < 1) throw DomainError("depth must be positive");
  ParikhTable table(x.prefix(depth));
  if (k == 2) return lattice_search(depth, [&](std::size_t i, std::size_t j) { return table.vertex2(i, j); }, opt);
  return general_search(table, k, depth, opt);
}

ShuffleWitness witness_from_search(const InfiniteWord& x, const SearchOutcome& out, std::size_t k) {
  if (out.kind != SearchOutcome::Kind::witness) throw DomainError("search produced no witness");
  ShuffleWitness w;
  w.word = x;
  w.k = k;
  w.steering = finite_steering(out.steering, k);
  w.horizon = out.steering.size();
  w.label = "search";
  return w;
}

}  // namespace selfshuffle
