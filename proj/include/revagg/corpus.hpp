#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revagg {

// Normalized peer-review corpus: papers with their reviews, optional
// meta-review and optional accept/reject decision, plus provenance counts.

enum class Decision { Accept, Reject };

// "Accept (Poster)" -> Accept, "Reject" -> Reject, anything else -> nullopt.
// Matching is case-insensitive substring search.
std::optional<Decision> normalize_decision(std::string_view raw);
const char* to_string(Decision d);

struct ReviewRecord {
  std::string text;  // non-empty after trimming
  std::optional<int> recommendation;
  std::optional<int> confidence;

  bool operator==(const ReviewRecord&) const = default;
};

struct PaperRecord {
  std::string id;
  std::string venue;
  int year = 0;
  std::string title;
  std::string abstract_text;
  std::vector<ReviewRecord> reviews;  // source order
  std::optional<std::string> meta_review;
  std::optional<Decision> decision;

  bool operator==(const PaperRecord&) const = default;
};

struct Corpus {
  std::vector<PaperRecord> papers;
  // (source name, record count); counts sum to papers.size(). Zero-count
  // entries record id renames made while merging.
  std::vector<std::pair<std::string, std::size_t>> provenance;

  bool operator==(const Corpus&) const = default;
};

struct RejectEntry {
  std::size_t line = 0;         // 1-based line in the dump
  std::size_t byte_offset = 0;  // absolute offset of the line start
  std::string id;               // empty when the id itself was missing
  std::string reason;
};

struct ParsedDump {
  std::vector<PaperRecord> papers;
  std::vector<RejectEntry> rejects;
};

enum class OnBadJson { Collect, Throw };

// Reads a JSON-Lines dump of review-site notes. A note whose forum field is
// absent or equal to its own id is a paper; replies attach by replyto/forum.
// Notes missing an id or (for papers) a title become reject entries. With
// OnBadJson::Throw a malformed line raises ParseError at its byte offset;
// with Collect it becomes a reject entry instead.
ParsedDump parse_openreview_dump(std::istream& in,
                                 OnBadJson mode = OnBadJson::Collect);

// Review texts joined in source order with single spaces. Throws
// EmptyInputError when the paper has no reviews.
std::string merge_reviews(const PaperRecord& paper);

// Trailing "first max_reviews only" variant used for feature assembly.
std::string merge_reviews(const PaperRecord& paper, std::size_t max_reviews);

struct SplitResult {
  Corpus train;
  Corpus validation;
  Corpus test;
};

// Deterministic split: papers are ordered by id, shuffled by the seed, then
// cut so test gets floor((1-train_fraction)*n) papers and validation gets
// floor(validation_fraction_of_train * remaining).
SplitResult split_dataset(const Corpus& corpus, double train_fraction,
                          double validation_fraction_of_train,
                          std::uint64_t seed);

// Concatenates corpora; a duplicate id gets a "#k" suffix (k = 2, 3, ...)
// derived from its base id, and the rename is recorded as a zero-count
// provenance entry.
Corpus merge_corpora(const std::vector<Corpus>& corpora);

// Keeps only papers that carry a decision label.
Corpus filter_labeled(const Corpus& corpus);

// ---- normalized JSONL serialization ----------------------------------------

std::string paper_to_json_line(const PaperRecord& paper);
PaperRecord paper_from_json_line(std::string_view line);

// First line is a provenance header, then one paper per line.
void write_corpus_jsonl(const Corpus& corpus, std::ostream& out);
void write_corpus_file(const Corpus& corpus, const std::string& path);

// Accepts files with or without the header; without one, provenance becomes
// {(source_name, n)}.
Corpus read_corpus_jsonl(std::istream& in, const std::string& source_name);
Corpus read_corpus_file(const std::string& path);

// SHA-256 over the paper lines only (provenance does not affect identity).
std::string corpus_checksum(const Corpus& corpus);

void write_rejects_jsonl(const std::vector<RejectEntry>& rejects,
                         std::ostream& out);

}  // namespace revagg
