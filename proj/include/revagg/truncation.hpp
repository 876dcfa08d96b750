#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "revagg/sentiment.hpp"

namespace revagg {

// Sentiment-partitioned extractive condensation of a merged peer review:
// sentences are split into neutral / pros / cons by polarity sign, each part
// is summarized under a 20% / 40% / 40% word budget (ceiling-rounded), and
// the parts are concatenated neutral -> pros -> cons.

struct DraftBudgets {
  std::size_t neutral = 0;
  std::size_t pros = 0;
  std::size_t cons = 0;
};

struct DraftReview {
  std::string neutral;
  std::string pros;
  std::string cons;
  std::string combined;
  DraftBudgets budgets;
};

inline constexpr std::size_t kDefaultDraftWordCount = 300;
inline constexpr std::size_t kDefaultMetaWordCount = 150;

DraftBudgets draft_budgets(std::size_t word_count);

DraftReview build_draft_review(std::string_view merged_review,
                               std::size_t word_count,
                               const SentimentLexicon& lexicon =
                                   SentimentLexicon::bundled());

// Plain ranked truncation, used for meta-review texts. Empty input gives "".
std::string truncate_meta_review(std::string_view meta_review,
                                 std::size_t word_count);

}  // namespace revagg
