#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selfshuffle/words.hpp"

namespace selfshuffle {

// Steering words use letters 0..k-1 internally and display as 1..k.
struct ShuffleWitness {
  InfiniteWord word;                   // x
  std::size_t k = 2;
  InfiniteWord steering;
  std::vector<InfiniteWord> sources;   // empty: k copies of word
  std::optional<std::size_t> horizon;  // steering only known to this length
  std::string label;

  const InfiniteWord& source(std::size_t j) const { return sources.empty() ? word : sources.at(j); }
};

// A steering word known only up to its length; reading past it throws.
InfiniteWord finite_steering(std::vector<Letter> steering, std::size_t k);
InfiniteWord parse_steering(std::string_view text, std::size_t k);  // "1212..." (digits 1..k)

struct VerifyReport {
  bool ok = false;
  std::size_t depth = 0;
  std::optional<std::size_t> mismatch;  // first bad position of the output
  std::vector<std::size_t> consumed;
  std::string reason;

  std::vector<std::size_t> starved() const;  // copies that consumed nothing
  bool degenerate() const { return !starved().empty(); }
};

InfiniteWord interleave(std::vector<InfiniteWord> sources, InfiniteWord steering);
// z_n is the next unconsumed letter of sources[s_n]; throws if a source runs out
FiniteWord interleave_finite(const std::vector<FiniteWord>& sources, std::span<const Letter> steering);

VerifyReport verify_shuffle(const InfiniteWord& target, const std::vector<InfiniteWord>& sources,
                            const InfiniteWord& steering, std::size_t depth);
VerifyReport verify_witness(const ShuffleWitness& w, std::size_t depth);
VerifyReport verify_witness(const InfiniteWord& x, const ShuffleWitness& w, std::size_t depth);

// Some steering word s with z = interleave(parts, s), by dynamic programming.
std::optional<std::vector<Letter>> find_shuffle(const FiniteWord& z, const FiniteWord& u, const FiniteWord& v);

// The word x(s) of a steering word s beginning a^r b.
struct SteeringConstruction {
  std::size_t r = 0;
  std::vector<std::size_t> ell;    // ell(n) = |s_0..s_n|_{s_n} - 1
  std::vector<std::size_t> klass;  // class index of each position (order of first appearance)
  FiniteWord word;                 // letters a, b, c, ...
};
SteeringConstruction steering_to_word(std::span<const Letter> steering, std::size_t depth);

// Witness for tau(x): copy s_n is repeated |tau(x_n)| times.
ShuffleWitness morphic_transport(const ShuffleWitness& w, const Morphism& tau);
// For a fixed point x of tau with tau^l(a) beginning with u for every letter a:
// witness for u^{-1} x.
ShuffleWitness prefix_removal_transport(const ShuffleWitness& w, const Morphism& tau, std::size_t l,
                                        const FiniteWord& u);

class ParikhTable {
 public:
  explicit ParikhTable(const FiniteWord& prefix);
  std::size_t length() const { return n_; }
  std::size_t count(std::size_t len, Letter a) const { return counts_[a * (n_ + 1) + len]; }
  // sum_j Psi(pref_{i_j}) == Psi(pref_{sum i_j})
  bool vertex(std::span<const std::size_t> tuple) const;
  bool vertex2(std::size_t i, std::size_t j) const;

 private:
  std::size_t n_;
  std::size_t sigma_;
  std::vector<std::uint32_t> counts_;
};

struct ShuffleFrontier {
  std::size_t level = 0;
  std::size_t k = 2;
  std::vector<std::vector<std::size_t>> tuples;  // sorted, distinct
};

ShuffleFrontier initial_frontier(std::size_t k);
ShuffleFrontier frontier_step(const ParikhTable& table, const ShuffleFrontier& f);
ShuffleFrontier frontier_step(const InfiniteWord& x, const ShuffleFrontier& f);

enum class SearchStrategy {
  corridor,  // from level ceil(start*depth) on, keep only vertices with every coordinate >= n/(4k)
  endpoint,  // plain BFS; only the final level is held to the depth/(2k) threshold
};

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::corridor;
  double corridor_start = 0.25;
  std::size_t memory_budget = 10'000'000;  // stored tuples
};

struct SearchOutcome {
  enum class Kind { witness, dead, alive };
  enum class Death { none, empty_frontier, starvation };
  Kind kind = Kind::alive;
  Death death = Death::none;
  std::size_t depth = 0;
  std::size_t level = 0;  // dead: the death level; otherwise the last level reached
  std::size_t bound = 0;  // largest min coordinate at `level`
  std::size_t max_frontier = 0;
  std::size_t final_frontier = 0;
  bool truncated = false;
  std::vector<Letter> steering;  // witness only
  std::vector<std::size_t> consumed;

  std::string kind_name() const;
  std::string death_name() const;
};

using VertexTest = std::function<bool(std::size_t, std::size_t)>;

// The k = 2 lattice BFS behind search_self_shuffle, over an arbitrary vertex test.
SearchOutcome lattice_search(std::size_t depth, const VertexTest& vertex, const SearchOptions& opt = {});
// All reachable level sets of the k = 2 graph (no pruning): levels[n] = sorted i_1 values.
std::vector<std::vector<std::size_t>> lattice_levels(std::size_t depth, const VertexTest& vertex);

SearchOutcome search_self_shuffle(const InfiniteWord& x, std::size_t k, std::size_t depth,
                                  const SearchOptions& opt = {});
ShuffleWitness witness_from_search(const InfiniteWord& x, const SearchOutcome& out, std::size_t k);

}  // namespace selfshuffle
