#include <doctest.h>

#include "revagg/errors.hpp"
#include "revagg/textproc.hpp"
#include "revagg/textrank.hpp"
#include "revagg/truncation.hpp"

using namespace revagg;

namespace {

// Mixed-polarity review text under the bundled lexicon.
const char* kFixture =
    "The paper studies graph ranking for review aggregation. "
    "The writing is clear and the experiments are thorough. "
    "However the evaluation section is weak and confusing. "
    "The appendix describes the dataset construction process. "
    "Results are impressive on every benchmark. "
    "The related work coverage is incomplete. "
    "The method section defines the model formally. "
    "I like the careful ablation design. "
    "The notation is sloppy in several places.";

}  // namespace

TEST_SUITE("truncation") {

TEST_CASE("budgets follow the 20/40/40 ceiling rule") {
  DraftBudgets b100 = draft_budgets(100);
  CHECK(b100.neutral == 20);
  CHECK(b100.pros == 40);
  CHECK(b100.cons == 40);

  DraftBudgets b1 = draft_budgets(1);
  CHECK(b1.neutral == 1);
  CHECK(b1.pros == 1);
  CHECK(b1.cons == 1);

  // exhaustive ceiling check against integer arithmetic
  for (std::size_t wc = 1; wc <= 500; ++wc) {
    DraftBudgets b = draft_budgets(wc);
    CHECK(b.neutral == (wc + 4) / 5);
    CHECK(b.pros == (2 * wc + 4) / 5);
    CHECK(b.cons == (2 * wc + 4) / 5);
  }
}

TEST_CASE("draft review partitions and re-scores consistently") {
  DraftReview draft = build_draft_review(kFixture, 100);
  const auto& lex = SentimentLexicon::bundled();

  for (const auto& s : sentence_tokenize(draft.pros)) {
    CHECK(polarity(s.text, lex).value > 0.0);
  }
  for (const auto& s : sentence_tokenize(draft.cons)) {
    CHECK(polarity(s.text, lex).value < 0.0);
  }
  for (const auto& s : sentence_tokenize(draft.neutral)) {
    CHECK(polarity(s.text, lex).value == 0.0);
  }
  CHECK(!draft.pros.empty());
  CHECK(!draft.cons.empty());
  CHECK(!draft.neutral.empty());
}

TEST_CASE("combined concatenates neutral, pros, cons in order") {
  DraftReview draft = build_draft_review(kFixture, 100);
  std::string expected = draft.neutral;
  if (!draft.pros.empty()) expected += " " + draft.pros;
  if (!draft.cons.empty()) expected += " " + draft.cons;
  CHECK(draft.combined == expected);
}

TEST_CASE("every combined sentence comes from the source") {
  DraftReview draft = build_draft_review(kFixture, 60);
  SentenceList source = sentence_tokenize(kFixture);
  for (const auto& s : sentence_tokenize(draft.combined)) {
    bool found = false;
    for (const auto& src : source) {
      if (src.text == s.text) {
        found = true;
        break;
      }
    }
    CAPTURE(s.text);
    CHECK(found);
  }
}

TEST_CASE("all-neutral text leaves pros and cons empty") {
  std::string neutral_text =
      "The dataset contains papers from two venues. "
      "Each paper carries several reviews. "
      "The model takes tokens as input.";
  DraftReview draft = build_draft_review(neutral_text, 100);
  CHECK(draft.pros == "");
  CHECK(draft.cons == "");
  CHECK(!draft.neutral.empty());
  CHECK(draft.combined == draft.neutral);
}

TEST_CASE("empty merged review is an error, empty partitions are not") {
  CHECK_THROWS_AS(build_draft_review("", 100), EmptyInputError);
  CHECK_THROWS_AS(build_draft_review("   \n", 100), EmptyInputError);
  CHECK_THROWS_AS(build_draft_review(kFixture, 0), ArgumentError);
}

TEST_CASE("draft building is deterministic") {
  DraftReview a = build_draft_review(kFixture, 80);
  DraftReview b = build_draft_review(kFixture, 80);
  CHECK(a.neutral == b.neutral);
  CHECK(a.pros == b.pros);
  CHECK(a.cons == b.cons);
  CHECK(a.combined == b.combined);
}

TEST_CASE("meta-review truncation delegates to the summarizer") {
  CHECK(truncate_meta_review("One sentence meta review.", 150) ==
        "One sentence meta review.");
  CHECK(truncate_meta_review("", 150) == "");
  CHECK(truncate_meta_review("  ", 150) == "");

  std::string meta =
      "The reviewers agree the idea is promising. "
      "The evaluation is too thin for acceptance. "
      "A revision should add stronger baselines.";
  CHECK(truncate_meta_review(meta, 150) == textrank_summarize(meta, 150));

  // budget covering everything keeps the full text in source order
  CHECK(truncate_meta_review(meta, count_words(meta)) ==
        "The reviewers agree the idea is promising. "
        "The evaluation is too thin for acceptance. "
        "A revision should add stronger baselines.");
  CHECK_THROWS_AS(truncate_meta_review(meta, 0), ArgumentError);
}

}  // TEST_SUITE
