#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "selfshuffle/quad.hpp"
#include "selfshuffle/words.hpp"

namespace selfshuffle {

struct SturmianSpec {
  QuadExt alpha;
  QuadExt rho;  // rho == 1 selects z(alpha, 1)
  void validate() const;
};

// z_n = floor((n+1)alpha + rho) - floor(n alpha + rho); rho = 1 gives 1 z(alpha,0)_{n>=1}.
InfiniteWord mechanical(const SturmianSpec& spec);
InfiniteWord mechanical(const QuadExt& alpha, const QuadExt& rho);

// Position of a Sturmian trajectory on the circle. The coding of an exact
// point p reads letters of p, p+alpha, ... with 1 on [1-alpha, 1); a
// left-limit point p- codes the limit of p-eps as eps -> 0+ (so 0- codes 1C).
class RotationPoint {
 public:
  RotationPoint(QuadExt alpha, const QuadExt& rho, bool left_limit = false);
  // rho in [0,1]: rho == 1 is the left limit at 0
  static RotationPoint from_intercept(const QuadExt& alpha, const QuadExt& rho);

  const QuadExt& alpha() const { return alpha_; }
  const QuadExt& value() const { return value_; }
  bool left_limit() const { return left_; }
  Letter letter() const;
  RotationPoint rotated() const;
  RotationPoint rotated(std::size_t times) const;
  // image under the letter exchange 0 <-> 1 (slope 1 - alpha)
  RotationPoint exchanged() const;
  std::string to_string() const;

  // Equal points code equal words.
  friend bool operator==(const RotationPoint& x, const RotationPoint& y) {
    return x.value_ == y.value_ && x.left_ == y.left_;
  }
  // Lexicographic order of the coded words, decided exactly.
  friend std::strong_ordering operator<=>(const RotationPoint& x, const RotationPoint& y);

 private:
  QuadExt alpha_;
  QuadExt value_;
  bool left_ = false;
  void canonicalize();
};

// True iff p = -n alpha mod 1 for some n >= 0.
bool in_backward_orbit(const QuadExt& p, const QuadExt& alpha);

InfiniteWord coding(const RotationPoint& p);

// Lexicographic comparison of the words coded by x and y, letter by letter
// with the equal-point short circuit (oracle for operator<=>).
std::strong_ordering lex_compare_by_letters(const RotationPoint& x, const RotationPoint& y, std::size_t limit = 1u << 20);

// Shortest palindrome having u as a prefix.
FiniteWord pal_closure(const FiniteWord& u);

class DirectiveSequence {
 public:
  DirectiveSequence() = default;
  // prefix followed by period^omega; an empty period makes the sequence finite
  DirectiveSequence(std::vector<Letter> prefix, std::vector<Letter> period);
  // "0,0,[1,0]" (eventual period in brackets) or "0,0,1,0,1,1,0,1" (finite)
  static DirectiveSequence parse(std::string_view text);

  bool finite() const { return period_.empty(); }
  std::size_t known_length() const { return prefix_.size(); }  // finite case
  Letter at(std::size_t k) const;  // a_k, k >= 1
  bool has(std::size_t k) const { return k >= 1 && (!finite() || k <= prefix_.size()); }
  // k_a(i): the i-th index k >= 1 with a_k = a (nullopt if the finite sequence runs out)
  std::optional<std::size_t> occurrence(Letter a, std::size_t i) const;
  const std::vector<Letter>& prefix() const { return prefix_; }
  const std::vector<Letter>& period() const { return period_; }
  std::string to_string() const;

 private:
  std::vector<Letter> prefix_;
  std::vector<Letter> period_;
};

// Phi(k) = Pal(Phi(k-1) a_k) and w_k with Phi(k) = Phi(k-1) w_k, computed lazily.
class PalindromicConstruction {
 public:
  explicit PalindromicConstruction(DirectiveSequence dir);

  const DirectiveSequence& directive() const { return dir_; }
  std::size_t phi_length(std::size_t k) const;
  FiniteWord phi(std::size_t k) const;
  FiniteWord block(std::size_t k) const;  // w_k, k >= 1
  // smallest k with |Phi(k)| >= n (throws if the finite directive is too short)
  std::size_t level_for_length(std::size_t n) const;
  InfiniteWord word() const;  // lim Phi(k)

 private:
  struct State;
  DirectiveSequence dir_;
  std::shared_ptr<State> state_;
  void ensure_level(std::size_t k) const;
};

InfiniteWord characteristic_from_directive(const DirectiveSequence& dir);
FiniteWord directive_blocks(const DirectiveSequence& dir, std::size_t k);

// Slope of the characteristic word with this eventually periodic directive.
QuadExt slope_from_directive(const DirectiveSequence& dir);

// Zero-run lengths k_1, k_2, ... of x = prod 0^{k_i} 1, scanned from a prefix.
std::vector<std::size_t> zero_runs(const InfiniteWord& x, std::size_t count, std::size_t horizon);

}  // namespace selfshuffle
