#include "selfshuffle/words.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <sstream>

namespace selfshuffle {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || names_.size() > 256) throw DomainError("alphabet size must be in 1..256");
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty letter name");
    if (n.size() != 1) single_char_ = false;
  }
  auto sorted = names_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("duplicate letter name");
}

AlphabetPtr Alphabet::range(int first, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(first + static_cast<int>(i)));
  return std::make_shared<const Alphabet>(std::move(names));
}

AlphabetPtr Alphabet::binary() {
  static const AlphabetPtr a = range(0, 2);
  return a;
}

AlphabetPtr Alphabet::digits(std::size_t n) { return n == 2 ? binary() : range(0, n); }

AlphabetPtr Alphabet::steering(std::size_t k) { return range(1, k); }

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

std::string render(const AlphabetPtr& alphabet, std::span<const Letter> letters) {
  std::string out;
  bool sep = !alphabet->single_char();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (sep && i) out += ' ';
    out += alphabet->name(letters[i]);
  }
  return out;
}

bool isomorphic(std::span<const Letter> x, std::span<const Letter> y) {
  if (x.size() != y.size()) return false;
  std::map<Letter, Letter> f, g;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [it, fresh] = f.emplace(x[i], y[i]);
    if (!fresh && it->second != y[i]) return false;
    auto [jt, fresh2] = g.emplace(y[i], x[i]);
    if (!fresh2 && jt->second != x[i]) return false;
  }
  return true;
}

FiniteWord::FiniteWord(AlphabetPtr alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (a >= alphabet_->size()) throw DomainError("letter outside alphabet");
  }
}

FiniteWord FiniteWord::parse(std::string_view text, AlphabetPtr alphabet) {
  if (!alphabet->single_char()) throw DomainError("parse needs single-character letter names");
  FiniteWord w(alphabet);
  for (char ch : text) {
    auto a = alphabet->find(std::string_view(&ch, 1));
    if (!a) throw ParseError(std::string("letter '") + ch + "' not in alphabet");
    w.letters_.push_back(*a);
  }
  return w;
}

FiniteWord FiniteWord::slice(std::size_t from, std::size_t len) const {
  if (from > size() || len > size() - from) throw DomainError("slice out of range");
  return FiniteWord(alphabet_, std::vector<Letter>(letters_.begin() + from, letters_.begin() + from + len));
}

FiniteWord FiniteWord::reversed() const {
  return FiniteWord(alphabet_, std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

bool FiniteWord::is_palindrome() const { return std::equal(letters_.begin(), letters_.begin() + size() / 2, letters_.rbegin()); }

bool FiniteWord::has_prefix(const FiniteWord& u) const {
  return u.size() <= size() && std::equal(u.letters_.begin(), u.letters_.end(), letters_.begin());
}

std::vector<std::size_t> FiniteWord::parikh() const {
  std::vector<std::size_t> p(alphabet_->size(), 0);
  for (Letter a : letters_) ++p[a];
  return p;
}

std::string FiniteWord::to_string() const { return render(alphabet_, letters_); }

// ---------------------------------------------------------------------------

struct InfiniteWord::State {
  std::mutex mu;
  std::vector<Letter> cache;
  Extender extend;
  AlphabetPtr alphabet;
  std::optional<Periodicity> periodicity;
};

InfiniteWord::InfiniteWord() : InfiniteWord(Alphabet::binary(), [](std::vector<Letter>& out, std::size_t n) {
                                 out.resize(std::max(out.size(), n), 0);
                               }, Periodicity{0, 1}) {}

InfiniteWord::InfiniteWord(AlphabetPtr alphabet, Extender extend, std::optional<Periodicity> periodicity)
    : state_(std::make_shared<State>()) {
  state_->extend = std::move(extend);
  state_->alphabet = std::move(alphabet);
  state_->periodicity = periodicity;
}

void InfiniteWord::ensure(std::size_t n) const {
  if (state_->cache.size() >= n) return;
  std::size_t before = state_->cache.size();
  // grow geometrically so letter-by-letter access stays linear overall
  std::size_t target = std::max({n, before + std::min<std::size_t>(before, std::size_t{1} << 20), std::size_t{64}});
  state_->extend(state_->cache, target);
  if (state_->cache.size() < n) {
    throw DomainError("word is only known to length " + std::to_string(state_->cache.size()));
  }
  for (std::size_t i = before; i < state_->cache.size(); ++i) {
    if (state_->cache[i] >= state_->alphabet->size()) throw std::logic_error("word generator produced a letter outside its alphabet");
  }
}

Letter InfiniteWord::at(std::size_t i) const {
  std::lock_guard lock(state_->mu);
  ensure(i + 1);
  return state_->cache[i];
}

std::vector<Letter> InfiniteWord::letters(std::size_t n) const {
  std::lock_guard lock(state_->mu);
  ensure(n);
  return std::vector<Letter>(state_->cache.begin(), state_->cache.begin() + n);
}

const AlphabetPtr& InfiniteWord::alphabet() const { return state_->alphabet; }

std::optional<Periodicity> InfiniteWord::periodicity() const { return state_->periodicity; }

InfiniteWord InfiniteWord::from_function(AlphabetPtr alphabet, std::function<Letter(std::size_t)> f) {
  return InfiniteWord(std::move(alphabet), [f = std::move(f)](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n) out.push_back(f(out.size()));
  });
}

InfiniteWord InfiniteWord::eventually_periodic(const FiniteWord& u, const FiniteWord& v) {
  if (v.empty()) throw DomainError("periodic part must be non-empty");
  auto pre = u.letters();
  auto per = v.letters();
  return InfiniteWord(
      v.alphabet(),
      [pre, per](std::vector<Letter>& out, std::size_t n) {
        while (out.size() < n) {
          std::size_t i = out.size();
          out.push_back(i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()]);
        }
      },
      Periodicity{pre.size(), per.size()});
}

InfiniteWord drop(const InfiniteWord& w, std::size_t k) {
  std::optional<Periodicity> p = w.periodicity();
  if (p) p->preperiod = p->preperiod > k ? p->preperiod - k : 0;
  return InfiniteWord(
      w.alphabet(),
      [w, k](std::vector<Letter>& out, std::size_t n) {
        if (out.size() >= n) return;
        auto src = w.letters(n + k);
        out.assign(src.begin() + k, src.end());
      },
      p);
}

InfiniteWord prepend(const FiniteWord& u, const InfiniteWord& w) {
  std::optional<Periodicity> p = w.periodicity();
  if (p) p->preperiod += u.size();
  auto pre = u.letters();
  return InfiniteWord(
      w.alphabet(),
      [pre, w](std::vector<Letter>& out, std::size_t n) {
        if (out.size() >= n) return;
        out = pre;
        if (n > pre.size()) {
          auto src = w.letters(n - pre.size());
          out.insert(out.end(), src.begin(), src.end());
        }
      },
      p);
}

InfiniteWord map_letters(const InfiniteWord& w, AlphabetPtr target, std::vector<Letter> table) {
  return InfiniteWord(
      std::move(target),
      [w, table = std::move(table)](std::vector<Letter>& out, std::size_t n) {
        if (out.size() >= n) return;
        auto src = w.letters(n);
        for (std::size_t i = out.size(); i < n; ++i) out.push_back(table.at(src[i]));
      },
      w.periodicity());
}

InfiniteWord swap_letters(const InfiniteWord& w) {
  if (w.alphabet()->size() != 2) throw DomainError("swap_letters needs a binary word");
  return map_letters(w, w.alphabet(), {1, 0});
}

// ---------------------------------------------------------------------------

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<std::vector<Letter>> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->size()) throw DomainError("morphism needs one image per letter");
  for (const auto& im : images_) {
    for (Letter a : im) {
      if (a >= codomain_->size()) throw DomainError("morphism image outside codomain");
    }
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::pair<int, std::string>> rules;
  int top = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view rule = text.substr(pos, comma - pos);
    std::size_t colon = rule.find(':');
    if (colon != 1 || !std::isdigit(static_cast<unsigned char>(rule[0]))) {
      throw ParseError("bad morphism rule '" + std::string(rule) + "', expected like 0:01");
    }
    std::string image(rule.substr(2));
    for (char ch : image) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("bad morphism image '" + image + "'");
      top = std::max(top, ch - '0');
    }
    rules.emplace_back(rule[0] - '0', image);
    top = std::max(top, rule[0] - '0');
    pos = comma + 1;
  }
  auto alpha = Alphabet::digits(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<Letter>> images(alpha->size());
  std::vector<bool> seen(alpha->size(), false);
  for (auto& [a, im] : rules) {
    if (seen[a]) throw ParseError("letter " + std::to_string(a) + " has two rules");
    seen[a] = true;
    for (char ch : im) images[a].push_back(static_cast<Letter>(ch - '0'));
  }
  for (std::size_t a = 0; a < seen.size(); ++a) {
    if (!seen[a]) throw ParseError("no rule for letter " + std::to_string(a));
  }
  return Morphism(alpha, alpha, std::move(images));
}

bool Morphism::is_erasing() const {
  return std::any_of(images_.begin(), images_.end(), [](const auto& im) { return im.empty(); });
}

FiniteWord Morphism::apply(const FiniteWord& w) const {
  FiniteWord out(codomain_);
  for (Letter a : w.letters()) {
    const auto& im = images_.at(a);
    out.letters().insert(out.letters().end(), im.begin(), im.end());
  }
  return out;
}

FiniteWord Morphism::power(const FiniteWord& w, std::size_t times) const {
  if (times > 0 && !is_endomorphism()) throw DomainError("power of a non-endomorphism");
  FiniteWord out = w;
  for (std::size_t t = 0; t < times; ++t) out = apply(out);
  return out;
}

InfiniteWord Morphism::apply(const InfiniteWord& w) const {
  if (is_erasing()) throw DomainError("image of an infinite word under an erasing morphism");
  auto images = images_;
  auto read = std::make_shared<std::size_t>(0);
  return InfiniteWord(codomain_, [w, images, read](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n) {
      const auto& im = images[w.at((*read)++)];
      out.insert(out.end(), im.begin(), im.end());
    }
  });
}

Morphism Morphism::compose(const Morphism& inner) const {
  if (!(*inner.codomain_ == *domain_)) throw DomainError("compose: alphabets do not match");
  std::vector<std::vector<Letter>> images;
  for (const auto& im : inner.images_) images.push_back(apply(FiniteWord(domain_, im)).letters());
  return Morphism(inner.domain_, codomain_, std::move(images));
}

std::string Morphism::to_string() const {
  std::string s;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    if (a) s += ',';
    s += domain_->name(static_cast<Letter>(a)) + ":" + render(codomain_, images_[a]);
  }
  return s;
}

InfiniteWord fixed_point(const Morphism& mu, Letter a) {
  if (!mu.is_endomorphism()) throw DomainError("fixed point needs an endomorphism");
  if (mu.is_erasing()) throw DomainError("fixed point of an erasing morphism is not supported");
  if (a >= mu.domain()->size()) throw DomainError("fixed point: letter outside alphabet");
  const auto& start = mu.image(a);
  if (start.size() < 2 || start[0] != a) throw DomainError("fixed point: mu(a) must start with a and have length >= 2");
  auto read = std::make_shared<std::size_t>(1);
  return InfiniteWord(mu.codomain(), [mu, start, read](std::vector<Letter>& out, std::size_t n) {
    if (out.empty()) out = start;
    while (out.size() < n) {
      const auto& im = mu.image(out[(*read)++]);
      out.insert(out.end(), im.begin(), im.end());
    }
  });
}

// ---------------------------------------------------------------------------

namespace words {

InfiniteWord thue_morse() {
  return InfiniteWord::from_function(Alphabet::binary(),
                                     [](std::size_t i) { return static_cast<Letter>(std::popcount(i) & 1); });
}

InfiniteWord fibonacci() { return fixed_point(Morphism::parse("0:01,1:0"), 0); }

InfiniteWord period_doubling() { return fixed_point(Morphism::parse("0:01,1:00"), 0); }

InfiniteWord paper_folding() {
  // Toeplitz word 0?1?: holes are filled by the word itself
  return InfiniteWord::from_function(Alphabet::binary(), [](std::size_t i) {
    while (i % 2 == 1) i /= 2;
    return static_cast<Letter>(i % 4 == 2 ? 1 : 0);
  });
}

InfiniteWord full_complexity() {
  auto next = std::make_shared<std::size_t>(0);
  return InfiniteWord(Alphabet::binary(), [next](std::vector<Letter>& out, std::size_t n) {
    while (out.size() < n) {
      auto x = full_complexity::block((*next)++);
      out.insert(out.end(), x.letters().begin(), x.letters().end());
    }
  });
}

InfiniteWord three_shuffle_example() { return drop(fixed_point(Morphism::parse("0:0001,1:0101"), 0), 2); }

}  // namespace words

std::vector<std::string> named_word_list() {
  return {"fibonacci", "thue-morse", "period-doubling", "paper-folding", "full-complexity", "three-shuffle-example"};
}

InfiniteWord named_word(std::string_view name) {
  if (name == "fibonacci") return words::fibonacci();
  if (name == "thue-morse") return words::thue_morse();
  if (name == "period-doubling") return words::period_doubling();
  if (name == "paper-folding") return words::paper_folding();
  if (name == "full-complexity") return words::full_complexity();
  if (name == "three-shuffle-example") return words::three_shuffle_example();
  throw DomainError("unknown word name '" + std::string(name) + "'");
}

namespace full_complexity {

namespace {
FiniteWord zeros_ones(std::size_t i, std::size_t j) {
  FiniteWord w;
  w.letters().assign(i, 0);
  w.letters().insert(w.letters().end(), j, 1);
  return w;
}
}  // namespace

FiniteWord z(std::size_t n) {
  if (n == 0 || n > 24) throw DomainError("z_n: n out of range");
  FiniteWord w;
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
    for (std::size_t b = n; b-- > 0;) w.push_back(static_cast<Letter>((m >> b) & 1));
  }
  return w;
}

FiniteWord v(std::size_t i) {
  for (std::size_t n = 1; n < 40; ++n) {
    std::size_t t = n << (n - 1);
    if (t == i) return z(n);
    if (t > i) break;
  }
  return zeros_ones(i, i);
}

FiniteWord y(std::size_t j) {
  if (j > 30) throw DomainError("y_j: j too large");
  FiniteWord w;
  for (std::size_t t = 1; t <= j; ++t) {
    FiniteWord next = w;
    next.append(v(t));
    next.append(w);
    w = std::move(next);
  }
  return w;
}

FiniteWord block(std::size_t i) {
  if (i <= 1) return FiniteWord::parse("01");
  if (i == 2) return FiniteWord::parse("0011");
  FiniteWord w = zeros_ones(i, 0);
  w.append(y(i - 2));
  w.append(zeros_ones(0, i));
  return w;
}

std::vector<std::size_t> index_set(std::size_t i) {
  if (i < 2) throw DomainError("index_set needs i >= 2");
  std::size_t len = std::size_t{1} << i;
  std::vector<std::size_t> n;
  for (std::size_t p = 0; p < i; ++p) n.push_back(p);
  for (std::size_t p = i + 1; p <= len - i; ++p) n.push_back(p);
  auto vv = v(i - 1);
  for (std::size_t j = 1; j <= vv.size(); ++j) {
    if (vv[j - 1] == 1) n.push_back(len - i + j);
  }
  n.push_back(2 * len - i - 1);
  return n;
}

}  // namespace full_complexity

}  // namespace selfshuffle
