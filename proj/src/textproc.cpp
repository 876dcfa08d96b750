#include "revagg/textproc.hpp"

#include <sstream>

#include "revagg/util.hpp"

#include "abbreviations_data.inc"
#include "stopwords_data.inc"

namespace revagg {

namespace {

std::unordered_set<std::string> load_word_list(const char* data) {
  std::unordered_set<std::string> out;
  std::istringstream in(data);
  std::string line;
  while (std::getline(in, line)) {
    std::string word = trim(line);
    if (!word.empty() && word[0] != '#') out.insert(word);
  }
  return out;
}

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Token immediately preceding position `pos` (exclusive), lowercased with
// leading quotes/brackets stripped. Used for the abbreviation guard.
std::string preceding_token(std::string_view text, std::size_t pos) {
  std::size_t end = pos;
  std::size_t begin = end;
  while (begin > 0 && !is_ascii_space(text[begin - 1])) --begin;
  while (begin < end && !is_ascii_alnum(text[begin])) ++begin;
  return to_lower(text.substr(begin, end - begin));
}

}  // namespace

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> words =
      load_word_list(kStopwordsData);
  return words;
}

const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> words =
      load_word_list(kAbbreviationsData);
  return words;
}

SentenceList sentence_tokenize(std::string_view text) {
  SentenceList out;
  std::size_t n = text.size();

  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_ascii_space(text[begin])) ++begin;
    while (end > begin && is_ascii_space(text[end - 1])) --end;
    if (begin < end) {
      out.push_back({std::string(text.substr(begin, end - begin)), begin});
    }
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (is_terminal(text[i])) {
      std::size_t run_end = i;
      while (run_end + 1 < n && is_terminal(text[run_end + 1])) ++run_end;
      bool at_break = run_end + 1 >= n || is_ascii_space(text[run_end + 1]);
      if (at_break) {
        bool guarded = false;
        if (run_end == i && text[i] == '.') {
          // Single '.': check "e.g", "fig", ... against the abbreviation list.
          guarded = abbreviations().count(preceding_token(text, i)) > 0;
        }
        if (!guarded) {
          emit(start, run_end + 1);
          i = run_end + 1;
          start = i;
          continue;
        }
      }
      i = run_end + 1;
      continue;
    }
    ++i;
  }
  emit(start, n);
  return out;
}

TokenList tokenize_words(std::string_view text) {
  TokenList out;
  std::string cur;
  for (char c : text) {
    if (c == '\'') continue;  // keep contractions as one token ("doesn't" -> "doesnt")
    if (is_ascii_alnum(c)) {
      cur.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

TokenList preprocess(std::string_view text) {
  TokenList out;
  for (auto& token : tokenize_words(text)) {
    // "not" is kept despite being a stopword: dropping it would erase the
    // polarity of the sentence it came from.
    if (token != "not" && stopwords().count(token)) continue;
    out.push_back(porter_stem(token));
  }
  return out;
}

std::size_t count_words(std::string_view text) {
  std::size_t count = 0;
  bool in_word = false;
  for (char c : text) {
    if (is_ascii_space(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

}  // namespace revagg
