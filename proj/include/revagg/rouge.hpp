#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "revagg/textproc.hpp"

namespace revagg {

// Summary-quality metrics. Tokenization for every variant: lowercase, strip
// non-alphanumerics, Porter stem, no stopword removal.

enum class RougeVariant { N1, N2, L, Lsum };

const char* to_string(RougeVariant v);

struct RougeScores {
  double precision = 0.0;
  double recall = 0.0;
  double fmeasure = 0.0;
  RougeVariant variant = RougeVariant::N1;
  // Set when a side had no grams/tokens, making the ratio undefined
  // (reported as 0).
  bool degenerate = false;
};

TokenList rouge_tokenize(std::string_view text);

// Clipped n-gram overlap: each reference n-gram matches at most its
// multiplicity in the candidate. recall = matches / reference grams,
// precision = matches / candidate grams.
RougeScores rouge_n(std::string_view candidate, std::string_view reference,
                    std::size_t n);

// Longest common subsequence over stemmed tokens; recall and precision are
// the LCS length over each side's token count.
RougeScores rouge_l(std::string_view candidate, std::string_view reference);

// Summary-level LCS: for each reference sentence, the union of its canonical
// LCS match positions against every candidate sentence; matches are clipped
// so no token is counted beyond its multiplicity on either side, then summed
// over reference sentences.
//
// Canonical LCS positions come from the standard table backtrack: on a token
// match take the diagonal; otherwise step toward the larger subproblem,
// skipping a reference token on ties.
RougeScores rouge_lsum(std::string_view candidate, std::string_view reference);

// LCS length (exposed for reuse by rouge_l and tests).
std::size_t lcs_length(const TokenList& a, const TokenList& b);

// Reference-side positions of the canonical LCS of (reference, candidate).
std::vector<std::size_t> lcs_match_positions(const TokenList& reference,
                                             const TokenList& candidate);

// Arithmetic mean per field. All inputs must share one variant.
RougeScores mean_scores(const std::vector<RougeScores>& scores);

// Coleman-Liau readability index: 0.0588*L - 0.296*S - 15.8, with L = letters
// (alphanumerics) per 100 words and S = sentences per 100 words. Throws
// ArgumentError on zero words.
double coleman_liau(std::string_view text);

}  // namespace revagg
