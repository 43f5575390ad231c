#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "selfshuffle/quad.hpp"

namespace selfshuffle {

using Letter = std::uint8_t;

class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  static std::shared_ptr<const Alphabet> binary();
  static std::shared_ptr<const Alphabet> digits(std::size_t n);         // "0".."n-1"
  static std::shared_ptr<const Alphabet> steering(std::size_t k);       // "1".."k"
  static std::shared_ptr<const Alphabet> range(int first, std::size_t n);  // first..first+n-1

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(a); }
  std::optional<Letter> find(std::string_view name) const;
  bool single_char() const { return single_char_; }
  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  bool single_char_ = true;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

class FiniteWord {
 public:
  FiniteWord() : alphabet_(Alphabet::binary()) {}
  explicit FiniteWord(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  FiniteWord(AlphabetPtr alphabet, std::vector<Letter> letters);

  // each character is one letter name (single-character alphabets only)
  static FiniteWord parse(std::string_view text, AlphabetPtr alphabet = Alphabet::binary());

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter>& letters() { return letters_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  void push_back(Letter a) { letters_.push_back(a); }
  void append(const FiniteWord& w) { letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end()); }
  FiniteWord slice(std::size_t from, std::size_t len) const;
  FiniteWord prefix(std::size_t n) const { return slice(0, n); }
  FiniteWord reversed() const;
  bool is_palindrome() const;
  bool has_prefix(const FiniteWord& u) const;
  std::vector<std::size_t> parikh() const;
  std::string to_string() const;

  friend bool operator==(const FiniteWord& x, const FiniteWord& y) { return x.letters_ == y.letters_; }
  friend FiniteWord operator+(FiniteWord x, const FiniteWord& y) {
    x.append(y);
    return x;
  }

 private:
  AlphabetPtr alphabet_;
  std::vector<Letter> letters_;
};

std::string render(const AlphabetPtr& alphabet, std::span<const Letter> letters);

// Same word up to a bijective renaming of letters.
bool isomorphic(std::span<const Letter> x, std::span<const Letter> y);

// Appends letters to `out` until out.size() >= n (it may overshoot).
using Extender = std::function<void(std::vector<Letter>& out, std::size_t n)>;

struct Periodicity {
  std::size_t preperiod = 0;
  std::size_t period = 1;
};

// Lazily generated infinite word. Copies share the cache; thread safe.
class InfiniteWord {
 public:
  InfiniteWord();
  InfiniteWord(AlphabetPtr alphabet, Extender extend, std::optional<Periodicity> periodicity = std::nullopt);

  static InfiniteWord from_function(AlphabetPtr alphabet, std::function<Letter(std::size_t)> f);
  static InfiniteWord eventually_periodic(const FiniteWord& u, const FiniteWord& v);

  Letter at(std::size_t i) const;
  std::vector<Letter> letters(std::size_t n) const;
  FiniteWord prefix(std::size_t n) const { return FiniteWord(alphabet(), letters(n)); }
  std::string to_string(std::size_t n) const { return prefix(n).to_string(); }
  const AlphabetPtr& alphabet() const;
  // Known eventual period, when the word was built as u v^omega.
  std::optional<Periodicity> periodicity() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
  void ensure(std::size_t n) const;
};

InfiniteWord drop(const InfiniteWord& w, std::size_t k);
InfiniteWord prepend(const FiniteWord& u, const InfiniteWord& w);
InfiniteWord map_letters(const InfiniteWord& w, AlphabetPtr target, std::vector<Letter> table);
InfiniteWord swap_letters(const InfiniteWord& w);  // binary words only

class Morphism {
 public:
  Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<std::vector<Letter>> images);
  // "0:01,1:0"; letters are single characters, domain = codomain = digits
  static Morphism parse(std::string_view text);

  const AlphabetPtr& domain() const { return domain_; }
  const AlphabetPtr& codomain() const { return codomain_; }
  const std::vector<Letter>& image(Letter a) const { return images_.at(a); }
  bool is_erasing() const;
  bool is_endomorphism() const { return *domain_ == *codomain_; }

  FiniteWord apply(const FiniteWord& w) const;
  FiniteWord power(const FiniteWord& w, std::size_t times) const;  // mu^times(w)
  InfiniteWord apply(const InfiniteWord& w) const;
  Morphism compose(const Morphism& inner) const;  // this o inner
  std::string to_string() const;

 private:
  AlphabetPtr domain_;
  AlphabetPtr codomain_;
  std::vector<std::vector<Letter>> images_;
};

// mu^omega(a); mu(a) must start with a and be longer than one letter.
InfiniteWord fixed_point(const Morphism& mu, Letter a);

namespace words {
InfiniteWord thue_morse();
InfiniteWord fibonacci();
InfiniteWord period_doubling();
InfiniteWord paper_folding();
InfiniteWord full_complexity();
InfiniteWord three_shuffle_example();
}  // namespace words

// Names accepted by named_word: fibonacci, thue-morse, period-doubling,
// paper-folding, full-complexity, three-shuffle-example.
InfiniteWord named_word(std::string_view name);
std::vector<std::string> named_word_list();

// Blocks X_0, X_1, ... of the full-complexity construction and v_i, z_n.
namespace full_complexity {
FiniteWord block(std::size_t i);        // X_i
FiniteWord v(std::size_t i);            // v_i, i >= 1
FiniteWord z(std::size_t n);            // binary words of length n concatenated in lex order
FiniteWord y(std::size_t j);            // y_j
// Index set N_i (0-based positions in X_{i+1}) such that X_{i+1}
// restricted to N_i and to its complement both equal X_i. i >= 2.
std::vector<std::size_t> index_set(std::size_t i);
}  // namespace full_complexity

}  // namespace selfshuffle
