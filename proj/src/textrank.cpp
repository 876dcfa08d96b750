#include "revagg/textrank.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "revagg/errors.hpp"
#include "revagg/util.hpp"

namespace revagg {

double sentence_similarity(const TokenList& a, const TokenList& b) {
  std::unordered_set<std::string> set_a(a.begin(), a.end());
  std::unordered_set<std::string> set_b(b.begin(), b.end());
  if (set_a.size() < 2 || set_b.size() < 2) return 0.0;
  std::size_t overlap = 0;
  for (const auto& token : set_a) {
    if (set_b.count(token)) ++overlap;
  }
  if (overlap == 0) return 0.0;
  return static_cast<double>(overlap) /
         (std::log(static_cast<double>(set_a.size())) +
          std::log(static_cast<double>(set_b.size())));
}

SentenceGraph build_sentence_graph(const std::vector<TokenList>& sentences,
                                   double damping) {
  SentenceGraph graph;
  graph.node_count = sentences.size();
  graph.damping = damping;
  graph.weights.assign(graph.node_count * graph.node_count, 0.0);
  for (std::size_t i = 0; i < graph.node_count; ++i) {
    for (std::size_t j = i + 1; j < graph.node_count; ++j) {
      double w = sentence_similarity(sentences[i], sentences[j]);
      graph.weight(i, j) = w;
      graph.weight(j, i) = w;
    }
  }
  return graph;
}

RankVector rank_sentences(const SentenceGraph& graph, double tolerance,
                          int max_iterations) {
  std::size_t n = graph.node_count;
  if (n == 0) throw ArgumentError("rank_sentences: empty graph");
  double d = graph.damping;

  std::vector<double> strength(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) strength[j] += graph.weight(j, k);
  }

  RankVector scores(n, 1.0);
  RankVector next(n, 0.0);
  double delta = 0.0;
  for (int iter = 0; iter < max_iterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double incoming = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (strength[j] > 0.0 && graph.weight(j, i) > 0.0) {
          incoming += graph.weight(j, i) * scores[j] / strength[j];
        }
      }
      next[i] = (1.0 - d) + d * incoming;
    }
    delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      delta = std::max(delta, std::abs(next[i] - scores[i]));
    }
    scores.swap(next);
    if (delta < tolerance) return scores;
  }
  throw ConvergenceError("rank_sentences: no fixed point after " +
                             std::to_string(max_iterations) + " iterations",
                         delta);
}

std::string textrank_summarize(std::string_view text, std::size_t word_count) {
  if (word_count < 1) throw ArgumentError("textrank_summarize: word_count < 1");
  SentenceList sentences = sentence_tokenize(text);
  if (sentences.empty()) return "";
  if (sentences.size() == 1) return sentences[0].text;

  std::vector<TokenList> tokens;
  tokens.reserve(sentences.size());
  for (const auto& s : sentences) tokens.push_back(preprocess(s.text));

  SentenceGraph graph = build_sentence_graph(tokens);
  RankVector scores = rank_sentences(graph);

  std::vector<std::size_t> order(sentences.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (scores[a] != scores[b]) return scores[a] > scores[b];
                     return a < b;
                   });

  std::vector<std::size_t> selected;
  std::size_t used = 0;
  for (std::size_t idx : order) {
    std::size_t wc = count_words(sentences[idx].text);
    if (selected.empty()) {
      selected.push_back(idx);  // the top sentence is kept even over budget
      used = wc;
    } else if (used + wc <= word_count) {
      selected.push_back(idx);
      used += wc;
    } else {
      break;
    }
  }
  std::sort(selected.begin(), selected.end());

  std::vector<std::string> parts;
  parts.reserve(selected.size());
  for (std::size_t idx : selected) parts.push_back(sentences[idx].text);
  return join(parts, " ");
}

}  // namespace revagg
