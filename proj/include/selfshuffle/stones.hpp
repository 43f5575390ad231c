#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "selfshuffle/quad.hpp"
#include "selfshuffle/shuffle.hpp"

namespace selfshuffle {

struct EmbeddingParams {
  QuadExt alpha;
  QuadExt rho;
  void validate() const;
};

// 1_{x >= 1-rho} + 1_{y >= 1-rho} == floor(x + y + rho)
bool in_K(const CirclePoint& x, const CirclePoint& y, const QuadExt& rho);

// Vertex (i, j) of the shuffle graph of z(alpha, rho) read through the embedding.
// For rho = 1 the axes are vertices although they lie outside K.
bool embedding_vertex(std::size_t i, std::size_t j, const EmbeddingParams& p);

struct EmbeddingMismatch {
  std::size_t i, j;
  bool graph, embedding;
};

struct EmbeddingReport {
  bool ok = true;
  std::size_t checked = 0;
  std::vector<EmbeddingMismatch> mismatches;  // the first few
  std::size_t mismatch_count = 0;
};

// Compares the Parikh vertex test on z(alpha, rho) with the embedding for all i + j <= n_max.
EmbeddingReport graph_vs_embedding_check(const EmbeddingParams& p, std::size_t n_max);

// (1 - rho)/2 < alpha < min(rho, 1 - rho), strictly
bool in_regime(const EmbeddingParams& p);

enum class Region { D, T1, T2, F };
std::string region_name(Region r);

struct RegionFlags {
  bool in_k = false;
  bool dead_core = false;  // D_1 cap D_2 cap K
  bool t1 = false;
  bool t2 = false;
};

// Closed forms of the dead set and the two deterministic sets; throws outside the regime.
RegionFlags region_flags(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p);
// An alternative closed form of the first deterministic set that disagrees with the definition (comparison only).
bool t1_display(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p);
Region region_classify(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p);
// The same sets from their definitions through one rotation step (oracle).
Region region_by_definition(const CirclePoint& x, const CirclePoint& y, const EmbeddingParams& p);

struct TildeStep {
  int branch;  // 1 moves x, 2 moves y
  CirclePoint x, y;
  Region region;  // of the point reached
};

struct TildeResult {
  CirclePoint x, y;
  std::size_t steps_x = 0, steps_y = 0;
  std::vector<TildeStep> transcript;
};

// One step of R_{alpha, branch}, then forced moves through T1 / T2 until F.
TildeResult tilde_map(const CirclePoint& x, const CirclePoint& y, int branch, const EmbeddingParams& p,
                      std::size_t max_steps = 1'000'000);

struct StonePath {
  std::vector<std::pair<std::size_t, std::size_t>> points;  // (i_n, j_n), n = 0..
};

struct PathResult {
  SearchOutcome outcome;
  StonePath path;        // witness outcomes only
  bool certified = false;  // dead and known to have no path
};

PathResult path_extract(const EmbeddingParams& p, std::size_t n_max, const SearchOptions& opt = {});

std::string stones_svg(const EmbeddingParams& p, const StonePath& path, std::size_t max_points = 200);
std::string stones_csv(const EmbeddingParams& p, const StonePath& path);

}  // namespace selfshuffle
