#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "revagg/textproc.hpp"

namespace revagg {

// Graph-based extractive ranking: sentences are nodes, token-overlap
// similarity gives edge weights, and a weighted PageRank fixed point orders
// the sentences.

struct SentenceGraph {
  std::size_t node_count = 0;
  std::vector<double> weights;  // row-major node_count x node_count, symmetric
  double damping = 0.85;

  double weight(std::size_t i, std::size_t j) const {
    return weights[i * node_count + j];
  }
  double& weight(std::size_t i, std::size_t j) {
    return weights[i * node_count + j];
  }
};

using RankVector = std::vector<double>;

inline constexpr double kDefaultDamping = 0.85;
inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr int kDefaultMaxIterations = 200;

// Token-overlap similarity over unique tokens: |a n b| / (log|a| + log|b|).
// Zero when either side has fewer than two unique tokens or nothing overlaps.
double sentence_similarity(const TokenList& a, const TokenList& b);

// Builds the symmetric zero-diagonal similarity graph for already-preprocessed
// sentences.
SentenceGraph build_sentence_graph(const std::vector<TokenList>& sentences,
                                   double damping = kDefaultDamping);

// Iterates score_i = (1-d) + d * sum_j w_ji * score_j / strength_j until the
// largest per-node change drops below `tolerance`. Isolated nodes sit at 1-d.
// Throws ConvergenceError when max_iterations is exhausted.
RankVector rank_sentences(const SentenceGraph& graph,
                          double tolerance = kDefaultTolerance,
                          int max_iterations = kDefaultMaxIterations);

// Extractive summary under a word budget: sentences are taken in descending
// rank (ties to the earlier sentence) until the next one would overflow the
// budget; the top sentence is always kept; output preserves source order.
// Empty text gives an empty summary.
std::string textrank_summarize(std::string_view text, std::size_t word_count);

}  // namespace revagg
