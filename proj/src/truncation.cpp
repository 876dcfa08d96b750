#include "revagg/truncation.hpp"

#include "revagg/errors.hpp"
#include "revagg/textproc.hpp"
#include "revagg/textrank.hpp"
#include "revagg/util.hpp"

namespace revagg {

DraftBudgets draft_budgets(std::size_t word_count) {
  // ceil(0.2 * wc) and ceil(0.4 * wc) in exact integer arithmetic
  DraftBudgets b;
  b.neutral = (word_count + 4) / 5;
  b.pros = (2 * word_count + 4) / 5;
  b.cons = b.pros;
  return b;
}

DraftReview build_draft_review(std::string_view merged_review,
                               std::size_t word_count,
                               const SentimentLexicon& lexicon) {
  if (word_count < 1) throw ArgumentError("build_draft_review: word_count < 1");
  if (trim(merged_review).empty()) {
    throw EmptyInputError("build_draft_review: merged review is empty");
  }

  std::vector<std::string> neutral_sentences;
  std::vector<std::string> pros_sentences;
  std::vector<std::string> cons_sentences;
  for (const auto& sentence : sentence_tokenize(merged_review)) {
    switch (classify_sentence(polarity(sentence.text, lexicon))) {
      case SentimentLabel::Positive:
        pros_sentences.push_back(sentence.text);
        break;
      case SentimentLabel::Negative:
        cons_sentences.push_back(sentence.text);
        break;
      case SentimentLabel::Neutral:
        neutral_sentences.push_back(sentence.text);
        break;
    }
  }

  DraftReview draft;
  draft.budgets = draft_budgets(word_count);
  draft.neutral =
      textrank_summarize(join(neutral_sentences, " "), draft.budgets.neutral);
  draft.pros = textrank_summarize(join(pros_sentences, " "), draft.budgets.pros);
  draft.cons = textrank_summarize(join(cons_sentences, " "), draft.budgets.cons);
  draft.combined = join_nonempty({draft.neutral, draft.pros, draft.cons}, " ");
  return draft;
}

std::string truncate_meta_review(std::string_view meta_review,
                                 std::size_t word_count) {
  if (word_count < 1) {
    throw ArgumentError("truncate_meta_review: word_count < 1");
  }
  if (trim(meta_review).empty()) return "";
  return textrank_summarize(meta_review, word_count);
}

}  // namespace revagg
