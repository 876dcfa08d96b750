#include <doctest.h>

#include <set>
#include <sstream>

#include "revagg/corpus.hpp"
#include "revagg/errors.hpp"
#include "revagg/util.hpp"

using namespace revagg;

namespace {

const char* kDumpFixture = R"(
{"id":"p1","content":{"title":"Graph ranking for reviews","abstract":"We rank sentences.","decision":"Accept (Poster)"}}
{"id":"r1","forum":"p1","replyto":"p1","content":{"review":"Strong paper with solid results.","rating":"8: Top 50%","confidence":"4: Confident"}}
{"id":"r2","forum":"p1","replyto":"p1","content":{"review":"Some concerns about novelty.","rating":"5","confidence":"3"}}
{"id":"r3","forum":"p1","replyto":"p1","content":{"review":"Well written, accept."}}
{"id":"m1","forum":"p1","replyto":"p1","content":{"metareview":"Reviewers lean accept; novelty concerns noted."}}
)";

Corpus make_corpus(std::size_t n, const std::string& prefix = "p") {
  Corpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    PaperRecord paper;
    paper.id = prefix + std::to_string(i);
    paper.title = "Paper " + std::to_string(i);
    paper.abstract_text = "Abstract " + std::to_string(i);
    paper.reviews.push_back({"Review text " + std::to_string(i), 5, 3});
    paper.decision = i % 2 == 0 ? Decision::Accept : Decision::Reject;
    corpus.papers.push_back(std::move(paper));
  }
  corpus.provenance = {{prefix, n}};
  return corpus;
}

std::set<std::string> ids(const Corpus& corpus) {
  std::set<std::string> out;
  for (const auto& paper : corpus.papers) out.insert(paper.id);
  return out;
}

}  // namespace

TEST_SUITE("corpus") {

TEST_CASE("dump fixture parses field by field") {
  std::istringstream in(kDumpFixture);
  ParsedDump dump = parse_openreview_dump(in);
  CHECK(dump.rejects.empty());
  REQUIRE(dump.papers.size() == 1);

  const PaperRecord& paper = dump.papers[0];
  CHECK(paper.id == "p1");
  CHECK(paper.title == "Graph ranking for reviews");
  CHECK(paper.abstract_text == "We rank sentences.");
  REQUIRE(paper.decision.has_value());
  CHECK(*paper.decision == Decision::Accept);
  REQUIRE(paper.meta_review.has_value());
  CHECK(*paper.meta_review == "Reviewers lean accept; novelty concerns noted.");

  REQUIRE(paper.reviews.size() == 3);
  CHECK(paper.reviews[0].text == "Strong paper with solid results.");
  CHECK(paper.reviews[0].recommendation == 8);
  CHECK(paper.reviews[0].confidence == 4);
  CHECK(paper.reviews[1].recommendation == 5);
  CHECK(paper.reviews[1].confidence == 3);
  CHECK(!paper.reviews[2].recommendation.has_value());
  CHECK(!paper.reviews[2].confidence.has_value());
}

TEST_CASE("empty stream parses to nothing") {
  std::istringstream in("");
  ParsedDump dump = parse_openreview_dump(in);
  CHECK(dump.papers.empty());
  CHECK(dump.rejects.empty());
}

TEST_CASE("missing title and missing id are rejected") {
  std::istringstream in(
      "{\"id\":\"x\",\"content\":{\"abstract\":\"no title\"}}\n"
      "{\"content\":{\"title\":\"no id\"}}\n");
  ParsedDump dump = parse_openreview_dump(in);
  CHECK(dump.papers.empty());
  REQUIRE(dump.rejects.size() == 2);
  CHECK(dump.rejects[0].reason == "missing_title");
  CHECK(dump.rejects[0].id == "x");
  CHECK(dump.rejects[1].reason == "missing_id");
}

TEST_CASE("unlinked replies are reported") {
  std::istringstream in(
      "{\"id\":\"p1\",\"content\":{\"title\":\"T\"}}\n"
      "{\"id\":\"r9\",\"forum\":\"nope\",\"content\":{\"review\":\"lost\"}}\n");
  ParsedDump dump = parse_openreview_dump(in);
  CHECK(dump.papers.size() == 1);
  REQUIRE(dump.rejects.size() == 1);
  CHECK(dump.rejects[0].reason == "unlinked_reply");
}

TEST_CASE("replies may precede their paper") {
  std::istringstream in(
      "{\"id\":\"r1\",\"forum\":\"p1\",\"content\":{\"review\":\"early bird\"}}\n"
      "{\"id\":\"p1\",\"content\":{\"title\":\"T\"}}\n");
  ParsedDump dump = parse_openreview_dump(in);
  REQUIRE(dump.papers.size() == 1);
  REQUIRE(dump.papers[0].reviews.size() == 1);
  CHECK(dump.papers[0].reviews[0].text == "early bird");
}

TEST_CASE("malformed JSON: collected or thrown with a byte offset") {
  std::string data =
      "{\"id\":\"p1\",\"content\":{\"title\":\"T\"}}\n"
      "{broken json\n";
  {
    std::istringstream in(data);
    ParsedDump dump = parse_openreview_dump(in);
    CHECK(dump.papers.size() == 1);
    REQUIRE(dump.rejects.size() == 1);
    CHECK(dump.rejects[0].reason == "malformed_json");
    CHECK(dump.rejects[0].line == 2);
  }
  {
    std::istringstream in(data);
    try {
      parse_openreview_dump(in, OnBadJson::Throw);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      // offset points inside the second line
      CHECK(e.byte_offset() >= 37);
      CHECK(e.byte_offset() < data.size());
    }
  }
}

TEST_CASE("decision normalization") {
  CHECK(normalize_decision("Accept (Poster)") == Decision::Accept);
  CHECK(normalize_decision("ACCEPT") == Decision::Accept);
  CHECK(normalize_decision("Reject") == Decision::Reject);
  CHECK(normalize_decision("reject (desk)") == Decision::Reject);
  CHECK(!normalize_decision("Invite to Workshop Track").has_value());
  CHECK(!normalize_decision("").has_value());
}

TEST_CASE("merge_reviews joins trimmed texts in order") {
  PaperRecord paper;
  paper.id = "p";
  paper.reviews = {{"good.", {}, {}}, {"bad.", {}, {}}};
  CHECK(merge_reviews(paper) == "good. bad.");

  paper.reviews = {{"fine.", {}, {}}};
  CHECK(merge_reviews(paper) == "fine.");

  paper.reviews = {{"abcde", {}, {}}, {"fghijkl", {}, {}}, {"mnopqrstu", {}, {}}};
  CHECK(merge_reviews(paper).size() == 5 + 7 + 9 + 2);

  paper.reviews.clear();
  CHECK_THROWS_AS(merge_reviews(paper), EmptyInputError);
}

TEST_CASE("merge_reviews respects the max_reviews cap") {
  PaperRecord paper;
  paper.id = "p";
  for (int i = 0; i < 10; ++i) {
    paper.reviews.push_back({"r" + std::to_string(i), {}, {}});
  }
  CHECK(merge_reviews(paper, 2) == "r0 r1");
  CHECK(merge_reviews(paper, 100) == merge_reviews(paper));
}

TEST_CASE("split sizes follow floor rounding") {
  Corpus corpus = make_corpus(100);
  SplitResult split = split_dataset(corpus, 0.8, 0.2, 7);
  CHECK(split.train.papers.size() == 64);
  CHECK(split.validation.papers.size() == 16);
  CHECK(split.test.papers.size() == 20);

  Corpus one = make_corpus(1);
  SplitResult tiny = split_dataset(one, 0.8, 0.0, 99);
  CHECK(tiny.train.papers.size() == 1);
  CHECK(tiny.validation.papers.empty());
  CHECK(tiny.test.papers.empty());
}

TEST_CASE("split argument validation") {
  Corpus corpus = make_corpus(10);
  CHECK_THROWS_AS(split_dataset(corpus, 0.0, 0.0, 1), ArgumentError);
  CHECK_THROWS_AS(split_dataset(corpus, 1.0, 0.0, 1), ArgumentError);
  CHECK_THROWS_AS(split_dataset(corpus, 0.8, 1.0, 1), ArgumentError);
  Corpus empty;
  CHECK_THROWS_AS(split_dataset(empty, 0.8, 0.0, 1), EmptyInputError);
}

TEST_CASE("split determinism and input-order independence") {
  Corpus corpus = make_corpus(50);
  SplitResult a = split_dataset(corpus, 0.8, 0.2, 42);
  SplitResult b = split_dataset(corpus, 0.8, 0.2, 42);
  CHECK(a.train.papers == b.train.papers);
  CHECK(a.validation.papers == b.validation.papers);
  CHECK(a.test.papers == b.test.papers);

  Corpus reversed = corpus;
  std::reverse(reversed.papers.begin(), reversed.papers.end());
  SplitResult c = split_dataset(reversed, 0.8, 0.2, 42);
  CHECK(ids(a.train) == ids(c.train));
  CHECK(ids(a.test) == ids(c.test));
}

TEST_CASE("split partitions are disjoint and exhaustive across seeds") {
  Corpus corpus = make_corpus(37);
  std::set<std::string> all = ids(corpus);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SplitResult split = split_dataset(corpus, 0.7, 0.15, seed);
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const Corpus* part : {&split.train, &split.validation, &split.test}) {
      for (const auto& paper : part->papers) {
        seen.insert(paper.id);
        ++total;
      }
    }
    REQUIRE(total == corpus.papers.size());  // no overlaps possible if sizes match
    REQUIRE(seen == all);
  }
}

TEST_CASE("merge_corpora concatenates with provenance") {
  Corpus a = make_corpus(2, "a");
  Corpus b = make_corpus(3, "b");
  Corpus merged = merge_corpora({a, b});
  CHECK(merged.papers.size() == 5);
  REQUIRE(merged.provenance.size() == 2);
  CHECK(merged.provenance[0] == std::pair<std::string, std::size_t>{"a", 2});
  CHECK(merged.provenance[1] == std::pair<std::string, std::size_t>{"b", 3});

  Corpus with_empty = merge_corpora({Corpus{}, a});
  CHECK(with_empty.papers == a.papers);
}

TEST_CASE("duplicate ids get deterministic suffixes recorded in provenance") {
  Corpus a = make_corpus(1, "x");  // id x0
  Corpus b = make_corpus(1, "x");
  Corpus merged = merge_corpora({a, b});
  REQUIRE(merged.papers.size() == 2);
  CHECK(merged.papers[0].id == "x0");
  CHECK(merged.papers[1].id == "x0#2");

  bool rename_recorded = false;
  std::size_t count_sum = 0;
  for (const auto& [name, count] : merged.provenance) {
    count_sum += count;
    if (name == "renamed:x0->x0#2") {
      rename_recorded = true;
      CHECK(count == 0);
    }
  }
  CHECK(rename_recorded);
  CHECK(count_sum == merged.papers.size());
}

TEST_CASE("merge is associative on papers, suffixing included") {
  Corpus a = make_corpus(3, "a");
  Corpus b = make_corpus(2, "b");
  Corpus c = make_corpus(4, "c");
  // inject a cross-corpus duplicate
  b.papers[0].id = "a0";
  c.papers[0].id = "a0";

  Corpus left = merge_corpora({merge_corpora({a, b}), c});
  Corpus right = merge_corpora({a, merge_corpora({b, c})});
  Corpus flat = merge_corpora({a, b, c});
  CHECK(left.papers == right.papers);
  CHECK(left.papers == flat.papers);
}

TEST_CASE("jsonl round-trip preserves the corpus field-wise") {
  Corpus corpus = make_corpus(5);
  corpus.papers[1].meta_review = "A meta review.";
  corpus.papers[2].decision.reset();
  corpus.papers[3].reviews[0].recommendation.reset();
  corpus.papers[4].venue = "venue-x";
  corpus.papers[4].year = 2020;

  std::ostringstream out;
  write_corpus_jsonl(corpus, out);
  std::istringstream in(out.str());
  Corpus back = read_corpus_jsonl(in, "ignored");
  CHECK(back == corpus);
}

TEST_CASE("headerless jsonl gets source-name provenance") {
  Corpus corpus = make_corpus(2);
  std::string lines = paper_to_json_line(corpus.papers[0]) + "\n" +
                      paper_to_json_line(corpus.papers[1]) + "\n";
  std::istringstream in(lines);
  Corpus back = read_corpus_jsonl(in, "somefile.jsonl");
  CHECK(back.papers == corpus.papers);
  REQUIRE(back.provenance.size() == 1);
  CHECK(back.provenance[0].first == "somefile.jsonl");
  CHECK(back.provenance[0].second == 2);
}

TEST_CASE("checksum tracks paper content, not provenance") {
  Corpus a = make_corpus(3);
  Corpus b = a;
  b.provenance = {{"renamed-source", 3}};
  CHECK(corpus_checksum(a) == corpus_checksum(b));
  b.papers[0].title = "Changed";
  CHECK(corpus_checksum(a) != corpus_checksum(b));
}

TEST_CASE("filter_labeled keeps only decided papers") {
  Corpus corpus = make_corpus(4);
  corpus.papers[1].decision.reset();
  Corpus labeled = filter_labeled(corpus);
  CHECK(labeled.papers.size() == 3);
}

}  // TEST_SUITE
