#include <array>
#include <string>
#include <string_view>

#include "revagg/textproc.hpp"

// Porter's suffix-stripping algorithm, the original 1980 rule set.
// Conditions below follow the paper's notation: m is the measure of the stem,
// *v* means the stem contains a vowel, *d a double consonant ending, *o a
// consonant-vowel-consonant ending where the final consonant is not w, x or y.

namespace revagg {

namespace {

bool is_cons(const std::string& w, std::size_t i) {
  char c = w[i];
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_cons(w, i - 1);
    default:
      return true;
  }
}

// Measure of the prefix w[0..len): number of VC sequences.
std::size_t measure(const std::string& w, std::size_t len) {
  std::size_t m = 0;
  std::size_t i = 0;
  while (i < len && is_cons(w, i)) ++i;  // leading consonants
  while (i < len) {
    while (i < len && !is_cons(w, i)) ++i;  // vowel run
    if (i >= len) break;
    while (i < len && is_cons(w, i)) ++i;  // consonant run
    ++m;
  }
  return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (!is_cons(w, i)) return true;
  }
  return false;
}

bool ends_double_cons(const std::string& w, std::size_t len) {
  return len >= 2 && w[len - 1] == w[len - 2] && is_cons(w, len - 1);
}

bool ends_cvc(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (!is_cons(w, len - 3) || is_cons(w, len - 2) || !is_cons(w, len - 1)) {
    return false;
  }
  char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Within a step the longest matching suffix wins; if its condition fails no
// other rule in the step fires.
bool apply_rules(std::string& w, const Rule* rules, std::size_t count,
                 std::size_t min_measure) {
  const Rule* best = nullptr;
  for (std::size_t i = 0; i < count; ++i) {
    if (ends_with(w, rules[i].suffix)) {
      if (!best || rules[i].suffix.size() > best->suffix.size()) {
        best = &rules[i];
      }
    }
  }
  if (!best) return false;
  std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) > min_measure) {
    w.resize(stem_len);
    w += best->replacement;
    return true;
  }
  return false;
}

void step1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);  // sses -> ss
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);  // ies -> i
  } else if (ends_with(w, "ss")) {
    // keep
  } else if (ends_with(w, "s")) {
    w.resize(w.size() - 1);
  }
}

void step1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);  // eed -> ee
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w += 'e';
  } else if (ends_double_cons(w, w.size())) {
    char last = w[w.size() - 1];
    if (last != 'l' && last != 's' && last != 'z') w.resize(w.size() - 1);
  } else if (measure(w, w.size()) == 1 && ends_cvc(w, w.size())) {
    w += 'e';
  }
}

void step1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) {
    w[w.size() - 1] = 'i';
  }
}

void step2(std::string& w) {
  static constexpr std::array<Rule, 20> rules = {{
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"},
  }};
  apply_rules(w, rules.data(), rules.size(), 0);
}

void step3(std::string& w) {
  static constexpr std::array<Rule, 7> rules = {{
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""},
  }};
  apply_rules(w, rules.data(), rules.size(), 0);
}

void step4(std::string& w) {
  static constexpr std::array<Rule, 19> rules = {{
      {"al", ""},    {"ance", ""}, {"ence", ""}, {"er", ""},  {"ic", ""},
      {"able", ""},  {"ible", ""}, {"ant", ""},  {"ement", ""},
      {"ment", ""},  {"ent", ""},  {"ion", ""},  {"ou", ""},  {"ism", ""},
      {"ate", ""},   {"iti", ""},  {"ous", ""},  {"ive", ""}, {"ize", ""},
  }};
  const Rule* best = nullptr;
  for (const auto& r : rules) {
    if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size())) {
      best = &r;
    }
  }
  if (!best) return;
  std::size_t stem_len = w.size() - best->suffix.size();
  if (measure(w, stem_len) <= 1) return;
  if (best->suffix == "ion") {
    if (stem_len == 0) return;
    char c = w[stem_len - 1];
    if (c != 's' && c != 't') return;
  }
  w.resize(stem_len);
}

void step5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::size_t stem_len = w.size() - 1;
  std::size_t m = measure(w, stem_len);
  if (m > 1 || (m == 1 && !ends_cvc(w, stem_len))) {
    w.resize(stem_len);
  }
}

void step5b(std::string& w) {
  if (measure(w, w.size()) > 1 && ends_double_cons(w, w.size()) &&
      w[w.size() - 1] == 'l') {
    w.resize(w.size() - 1);
  }
}

}  // namespace

std::string porter_stem(std::string_view word) {
  std::string w(word);
  if (w.size() <= 2) return w;
  step1a(w);
  step1b(w);
  step1c(w);
  step2(w);
  step3(w);
  step4(w);
  step5a(w);
  step5b(w);
  return w;
}

}  // namespace revagg
