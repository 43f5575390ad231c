#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "selfshuffle/constructive.hpp"
#include "selfshuffle/sturmian.hpp"
#include "selfshuffle/words.hpp"

namespace selfshuffle {

struct BorderReport {
  std::size_t length = 0;
  std::vector<std::size_t> borders;  // Abelian border lengths in [1, length/2]
  bool border_free = true;
};

BorderReport abelian_borders(const FiniteWord& u);
bool has_abelian_border(const FiniteWord& u);

struct PrefixScan {
  std::size_t length = 0;   // longest qualifying prefix within the horizon
  std::size_t horizon = 0;
  bool saturated = false;   // 2 * length > horizon: the scan cannot tell whether it keeps growing
};

// Longest Abelian-border-free prefix of x of length <= horizon.
PrefixScan longest_ab_borderfree_prefix(const InfiniteWord& x, std::size_t horizon);
// Same for ordinary borders (a border is a proper prefix that is also a suffix).
PrefixScan longest_borderfree_prefix(const InfiniteWord& x, std::size_t horizon);

struct LyndonReport {
  bool lyndon_consistent = true;             // no violation found
  bool exact = false;                        // decided exactly (eventually periodic input)
  std::optional<std::size_t> violator;       // shift i with T^i x <= x
  std::size_t depth = 0;
};

// `order` lists the letters from smallest to largest (empty: natural order).
LyndonReport lyndon_status(const InfiniteWord& x, const std::vector<Letter>& order, std::size_t depth);

// Least n >= 1 with T^n x < x (first letter 0) or T^n x > x (first letter 1),
// decided exactly on the circle.
std::size_t lex_delay(const RotationPoint& p, std::size_t limit);
// The same from letters alone (oracle).
std::size_t lex_delay_by_letters(const InfiniteWord& x, std::size_t limit);

struct DelayReport {
  std::size_t ab_borderfree = 0;
  std::size_t borderfree = 0;
  std::size_t lex = 0;
  std::optional<std::size_t> machine;
  std::size_t delay = 0;  // the common value
};

// Throws std::logic_error with all values when the quantities disagree.
DelayReport shuffling_delay_sturmian(const QuadExt& alpha, const QuadExt& rho, std::size_t horizon,
                                     bool with_machine = true);

}  // namespace selfshuffle
