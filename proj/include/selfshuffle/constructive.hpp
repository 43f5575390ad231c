#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "selfshuffle/shuffle.hpp"
#include "selfshuffle/sturmian.hpp"

namespace selfshuffle {

// ----- Thue-Morse -----------------------------------------------------------
namespace thue_morse {
Morphism sigma();  // 1->12, 2->31, 3->34, 4->13
Morphism g();
Morphism h();
FiniteWord u();  // 01101
FiniteWord v();  // 001
// piece lengths of the local shuffle g(sigma(a)) in sh(g(a), h(a)); pieces alternate g, h, g, ...
const std::vector<std::size_t>& piece_lengths(Letter a);  // a in 0..3 for 1..4
}  // namespace thue_morse

ShuffleWitness tm_shuffle();

// ----- small explicit witnesses -----------------------------------------------
ShuffleWitness fibonacci_shuffle();        // steering = second shift of the word
ShuffleWitness period_doubling_shuffle();  // U_0 = 0100, V_0 = 01, U_i = s^{i+1}(1), V_i = s^i(1)
ShuffleWitness full_complexity_shuffle();
ShuffleWitness three_shuffle_example();    // k = 3

namespace three_shuffle {
// The blocks U_i, V_i, W_i (copy = 0, 1, 2).
FiniteWord block(std::size_t copy, std::size_t i);
}  // namespace three_shuffle

// ----- Sturmian rotation machine ------------------------------------------------
enum class RotationCase { c1_1, c1_2, c2_1, c2_2, c3_1, c3_2, c4, c5, c6_1, c6_2 };

std::string case_name(RotationCase c);
bool is_machine_edge(RotationCase from, RotationCase to);

struct MachineTransition {
  RotationCase from;
  RotationCase to;
  std::size_t steps;       // letters emitted in this phase
  std::size_t consumed_s;  // consumption of the trajectories labelled s, m, l after the phase
  std::size_t consumed_m;
  std::size_t consumed_l;
};

// Produces M in sh(S, L) for Sturmian S <= M <= L of a common slope.
// Steering letter 0 is the S copy, 1 the L copy.
class RotationMachine {
 public:
  RotationMachine(const RotationPoint& S, const RotationPoint& M, const RotationPoint& L);

  // run phases until at least n steering letters exist
  void run(std::size_t n);
  const std::vector<Letter>& steering() const { return steering_; }
  const std::vector<MachineTransition>& transitions() const { return trace_; }
  RotationCase initial_case() const { return initial_; }
  RotationCase current_case() const { return case_; }
  bool exchanged() const { return exchanged_; }

  std::size_t max_phase_steps = 50'000'000;

 private:
  struct Track {
    RotationPoint p;
    int copy;  // 0 = S copy, 1 = L copy, -1 for m
    std::size_t consumed = 0;
  };
  Track s_, m_, l_;
  QuadExt alpha_;
  bool exchanged_ = false;
  RotationCase case_;
  RotationCase initial_;
  std::vector<Letter> steering_;
  std::vector<MachineTransition> trace_;

  RotationCase classify() const;
  void check_state(RotationCase c) const;
  void follow(Track& f);
  void phase();
};

// Witness for M in sh(S, L); a self-shuffle when all three coincide.
// rho = 1 selects z(alpha, 1). `machine` (optional) receives the driving machine.
ShuffleWitness sturmian_shuffle(const QuadExt& alpha, const QuadExt& rho_s, const QuadExt& rho_m,
                                const QuadExt& rho_l, std::shared_ptr<RotationMachine>* machine = nullptr);
ShuffleWitness sturmian_shuffle(const RotationPoint& S, const RotationPoint& M, const RotationPoint& L,
                                std::shared_ptr<RotationMachine>* machine = nullptr);
// 0-based index of the first steering letter differing from the first one
std::size_t machine_delay(RotationMachine& machine, std::size_t limit);

// ----- characteristic words -------------------------------------------------------
struct CharacteristicTerms {
  long long u1, v1, u2, v2;
};

class CharacteristicShuffle {
 public:
  // x = prod 0^{k_i} 1 with k_i read from the word (zero runs)
  explicit CharacteristicShuffle(InfiniteWord x, std::size_t scan_horizon = std::size_t{1} << 26);
  CharacteristicTerms terms(std::size_t n) const;  // n >= 1
  std::size_t k(std::size_t i) const;              // k_i, i >= 1
  const InfiniteWord& word() const { return x_; }

 private:
  struct State;
  InfiniteWord x_;
  std::shared_ptr<State> state_;
  long long sum(std::size_t from, std::size_t to) const;  // k_from + ... + k_to
};

ShuffleWitness characteristic_shuffle(const InfiniteWord& x);

// ----- palindromic shuffles of 01C and 10C -------------------------------------------
enum class PalVariant { c01, c10 };

struct PalBlock {
  int copy;  // 0 = A, 1 = B
  FiniteWord word;
};

ShuffleWitness pal_shuffle(const DirectiveSequence& dir, PalVariant variant);
// merged runs of consecutive same-copy blocks, the first `count` of them
std::vector<PalBlock> pal_display_blocks(const DirectiveSequence& dir, PalVariant variant, std::size_t count);
InfiniteWord pal_word(const DirectiveSequence& dir, PalVariant variant);  // 01C or 10C

}  // namespace selfshuffle
