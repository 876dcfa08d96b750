#include <doctest.h>

#include <cmath>

#include "revagg/errors.hpp"
#include "revagg/rouge.hpp"
#include "revagg/util.hpp"
#include "support/oracles.hpp"

using namespace revagg;

namespace {

// Porter-stable synthetic vocabulary ("w0".."w19"): survives tokenization and
// stemming unchanged, so oracle token sequences equal library token sequences.
std::vector<std::string> random_tokens(SplitMix64& rng, std::size_t max_len,
                                       std::size_t vocab) {
  std::size_t len = rng.next_below(max_len + 1);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back("w" + std::to_string(rng.next_below(vocab)));
  }
  return out;
}

}  // namespace

TEST_SUITE("rouge") {

TEST_CASE("identical texts score 1.0 everywhere") {
  const char* text = "The model ranks review sentences by importance.";
  for (auto scores : {rouge_n(text, text, 1), rouge_n(text, text, 2),
                      rouge_l(text, text), rouge_lsum(text, text)}) {
    CHECK(scores.precision == 1.0);
    CHECK(scores.recall == 1.0);
    CHECK(scores.fmeasure == 1.0);
    CHECK(!scores.degenerate);
  }
}

TEST_CASE("disjoint vocabularies score zero") {
  const char* a = "alpha beta gamma";
  const char* b = "delta epsilon zeta";
  CHECK(rouge_n(a, b, 1).fmeasure == 0.0);
  CHECK(rouge_n(a, b, 2).fmeasure == 0.0);
  CHECK(rouge_l(a, b).fmeasure == 0.0);
  CHECK(rouge_lsum(a, b).fmeasure == 0.0);
}

TEST_CASE("unigram example: the cat sat vs the cat") {
  RougeScores s = rouge_n("the cat sat", "the cat", 1);
  CHECK(s.recall == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.precision == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.fmeasure == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("clipping caps matches by candidate multiplicity") {
  // candidate has one "cat", reference has two
  RougeScores s = rouge_n("cat dog", "cat cat", 1);
  CHECK(s.recall == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.precision == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("short reference is degenerate, reported as zero with a flag") {
  RougeScores s = rouge_n("one two three", "single", 2);
  CHECK(s.recall == 0.0);
  CHECK(s.degenerate);
  CHECK(rouge_n("", "", 1).degenerate);
  CHECK(rouge_l("", "x").degenerate);
  CHECK_THROWS_AS(rouge_n("a", "b", 0), ArgumentError);
}

TEST_CASE("stemming unifies inflections") {
  // running/runs -> run, ponies/pony -> poni
  RougeScores s = rouge_n("running ponies", "runs pony", 1);
  CHECK(s.fmeasure == 1.0);
}

TEST_CASE("lcs example: reversed two-word reference") {
  RougeScores s = rouge_l("cat the", "the cat");
  CHECK(s.recall == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.precision == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("lsum reduces to rouge_l for single sentences") {
  const char* cand = "the cat sat on the mat";
  const char* ref = "the cat ate the fish";
  RougeScores lsum = rouge_lsum(cand, ref);
  RougeScores l = rouge_l(cand, ref);
  CHECK(lsum.precision == doctest::Approx(l.precision).epsilon(1e-15));
  CHECK(lsum.recall == doctest::Approx(l.recall).epsilon(1e-15));
}

TEST_CASE("lsum two-sentence fixture matches the enumeration oracle") {
  const char* cand = "w1 w2 w3 w4. w5 w6 w1.";
  const char* ref = "w1 w2 w5. w3 w4 w6.";

  // oracle: canonical union per reference sentence + budget clipping
  std::vector<std::vector<std::string>> ref_sents = {{"w1", "w2", "w5"},
                                                     {"w3", "w4", "w6"}};
  std::vector<std::vector<std::string>> cand_sents = {{"w1", "w2", "w3", "w4"},
                                                      {"w5", "w6", "w1"}};
  std::map<std::string, long> ref_budget, cand_budget;
  long ref_total = 0, cand_total = 0;
  for (const auto& s : ref_sents)
    for (const auto& t : s) { ++ref_budget[t]; ++ref_total; }
  for (const auto& s : cand_sents)
    for (const auto& t : s) { ++cand_budget[t]; ++cand_total; }
  long hits = 0;
  for (const auto& rs : ref_sents) {
    std::vector<bool> in_union(rs.size(), false);
    for (const auto& cs : cand_sents) {
      for (std::size_t pos : oracles::lcs_positions_oracle(rs, cs)) {
        in_union[pos] = true;
      }
    }
    for (std::size_t pos = 0; pos < rs.size(); ++pos) {
      if (in_union[pos] && ref_budget[rs[pos]] > 0 && cand_budget[rs[pos]] > 0) {
        ++hits;
        --ref_budget[rs[pos]];
        --cand_budget[rs[pos]];
      }
    }
  }
  auto expected = oracles::prf_from_counts(
      static_cast<double>(hits), static_cast<double>(cand_total),
      static_cast<double>(ref_total));

  RougeScores got = rouge_lsum(cand, ref);
  CHECK(got.precision == doctest::Approx(expected.precision).epsilon(1e-15));
  CHECK(got.recall == doctest::Approx(expected.recall).epsilon(1e-15));
  CHECK(got.fmeasure == doctest::Approx(expected.fmeasure).epsilon(1e-15));
}

TEST_CASE("rouge_n matches the multiset oracle on random pairs") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 300; ++trial) {
    auto cand_tokens = random_tokens(rng, 30, 20);
    auto ref_tokens = random_tokens(rng, 30, 20);
    std::string cand = join(cand_tokens, " ");
    std::string ref = join(ref_tokens, " ");
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
      auto expected = oracles::rouge_n_oracle(cand_tokens, ref_tokens, n);
      RougeScores got = rouge_n(cand, ref, n);
      CHECK(std::abs(got.precision - expected.precision) < 1e-12);
      CHECK(std::abs(got.recall - expected.recall) < 1e-12);
      CHECK(std::abs(got.fmeasure - expected.fmeasure) < 1e-12);
    }
  }
}

TEST_CASE("rouge_l matches the recursive lcs oracle on random pairs") {
  SplitMix64 rng(505);
  for (int trial = 0; trial < 300; ++trial) {
    auto cand_tokens = random_tokens(rng, 30, 20);
    auto ref_tokens = random_tokens(rng, 30, 20);
    long lcs = oracles::lcs_length_oracle(ref_tokens, cand_tokens);
    auto expected = oracles::prf_from_counts(
        static_cast<double>(lcs), static_cast<double>(cand_tokens.size()),
        static_cast<double>(ref_tokens.size()));
    RougeScores got = rouge_l(join(cand_tokens, " "), join(ref_tokens, " "));
    CHECK(std::abs(got.precision - expected.precision) < 1e-12);
    CHECK(std::abs(got.recall - expected.recall) < 1e-12);
  }
}

TEST_CASE("precision and recall swap when sides swap") {
  SplitMix64 rng(606);
  for (int trial = 0; trial < 50; ++trial) {
    std::string a = join(random_tokens(rng, 20, 10), " ");
    std::string b = join(random_tokens(rng, 20, 10), " ");
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
      RougeScores ab = rouge_n(a, b, n);
      RougeScores ba = rouge_n(b, a, n);
      CHECK(std::abs(ab.precision - ba.recall) < 1e-15);
      CHECK(std::abs(ab.recall - ba.precision) < 1e-15);
    }
    RougeScores ab = rouge_l(a, b);
    RougeScores ba = rouge_l(b, a);
    CHECK(std::abs(ab.precision - ba.recall) < 1e-15);
    CHECK(std::abs(ab.recall - ba.precision) < 1e-15);
  }
}

TEST_CASE("all measures stay in [0,1]") {
  SplitMix64 rng(707);
  for (int trial = 0; trial < 100; ++trial) {
    std::string a = join(random_tokens(rng, 15, 5), " ");
    std::string b = join(random_tokens(rng, 15, 5), " ");
    for (const auto& s : {rouge_n(a, b, 1), rouge_n(a, b, 2), rouge_l(a, b),
                          rouge_lsum(a, b)}) {
      CHECK(s.precision >= 0.0);
      CHECK(s.precision <= 1.0);
      CHECK(s.recall >= 0.0);
      CHECK(s.recall <= 1.0);
      CHECK(s.fmeasure >= 0.0);
      CHECK(s.fmeasure <= 1.0);
    }
  }
}

TEST_CASE("mean_scores") {
  RougeScores x{0.2, 0.4, 0.3, RougeVariant::L, false};
  CHECK(mean_scores({x}).precision == 0.2);

  RougeScores zero{0, 0, 0, RougeVariant::N1, false};
  RougeScores one{1, 1, 1, RougeVariant::N1, false};
  RougeScores mean = mean_scores({zero, one});
  CHECK(mean.precision == 0.5);
  CHECK(mean.recall == 0.5);
  CHECK(mean.fmeasure == 0.5);

  SplitMix64 rng(808);
  std::vector<RougeScores> batch;
  double sum_p = 0.0, sum_r = 0.0, sum_f = 0.0;
  for (int i = 0; i < 10; ++i) {
    RougeScores s{rng.next_double(), rng.next_double(), rng.next_double(),
                  RougeVariant::N2, false};
    sum_p += s.precision;
    sum_r += s.recall;
    sum_f += s.fmeasure;
    batch.push_back(s);
  }
  RougeScores m = mean_scores(batch);
  CHECK(std::abs(m.precision - sum_p / 10.0) < 1e-12);
  CHECK(std::abs(m.recall - sum_r / 10.0) < 1e-12);
  CHECK(std::abs(m.fmeasure - sum_f / 10.0) < 1e-12);

  CHECK_THROWS_AS(mean_scores({}), ArgumentError);
  CHECK_THROWS_AS(mean_scores({x, zero}), ArgumentError);
}

TEST_CASE("coleman-liau hand fixtures") {
  // 5 sentences x 20 words, every word 5 letters: L=500, S=5 per 100 words
  std::string sentence;
  for (int i = 0; i < 20; ++i) sentence += i ? " abcde" : "abcde";
  sentence += ".";
  std::string text;
  for (int i = 0; i < 5; ++i) text += (i ? " " : "") + sentence;
  // one '.' per sentence is not a letter; 20*5 letters * 5 sentences
  CHECK(coleman_liau(text) == doctest::Approx(12.12).epsilon(1e-9));

  // single 1-letter word, one sentence
  CHECK(coleman_liau("a.") == doctest::Approx(-39.52).epsilon(1e-9));

  // doubling the text leaves the index unchanged
  std::string doubled = text + " " + text;
  CHECK(coleman_liau(doubled) == doctest::Approx(coleman_liau(text)).epsilon(1e-12));

  CHECK_THROWS_AS(coleman_liau(""), ArgumentError);
  CHECK_THROWS_AS(coleman_liau("   "), ArgumentError);
}

}  // TEST_SUITE
