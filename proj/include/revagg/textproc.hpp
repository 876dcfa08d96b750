#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace revagg {

// Deterministic text plumbing shared by sentiment scoring, sentence ranking,
// and summary metrics. Everything here is rule-based; no models, no locale
// dependence (ASCII rules, which the review corpora satisfy).

struct Sentence {
  std::string text;          // trimmed slice of the source
  std::size_t start_offset;  // char index of the first character in the source
};

using SentenceList = std::vector<Sentence>;
using TokenList = std::vector<std::string>;

// Splits on . ! ? followed by whitespace (or end of text). A single '.' whose
// preceding token is on the bundled abbreviation list does not end a sentence.
// A trailing fragment without terminal punctuation is kept as a sentence.
SentenceList sentence_tokenize(std::string_view text);

// lowercase -> strip non-alphanumerics -> drop stopwords (keeping "not",
// which carries sentiment) -> Porter stem.
TokenList preprocess(std::string_view text);

// Lowercased alphanumeric word tokens, nothing removed or stemmed.
TokenList tokenize_words(std::string_view text);

// Number of maximal whitespace-delimited tokens.
std::size_t count_words(std::string_view text);

// Porter's 1980 suffix-stripping algorithm. Expects a lowercase token.
std::string porter_stem(std::string_view word);

// Bundled word lists (also shipped as data/stopwords.txt and
// data/abbreviations.txt; the binary embeds the same bytes).
const std::unordered_set<std::string>& stopwords();
const std::unordered_set<std::string>& abbreviations();

}  // namespace revagg
