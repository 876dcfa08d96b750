#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace revagg {

// Lexicon-driven sentence polarity. Scores are raw-token based (lowercase,
// unstemmed) because valence tables key on surface forms.

struct PolarityScore {
  double value = 0.0;  // in [-1, 1]
};

enum class SentimentLabel { Positive, Negative, Neutral };

class SentimentLexicon {
public:
  SentimentLexicon() = default;

  // The lexicon compiled into the binary (same bytes as data/lexicon.tsv).
  static const SentimentLexicon& bundled();

  // Parses `token<TAB>valence` lines; '#' lines are comments.
  static SentimentLexicon load_file(const std::string& path);
  static SentimentLexicon parse(std::string_view content);

  // Direct construction, mainly for tests.
  static SentimentLexicon from_entries(
      std::unordered_map<std::string, double> entries);

  bool loaded() const { return loaded_; }
  std::size_t size() const { return valences_.size(); }
  std::optional<double> valence(const std::string& token) const;

  // Returns a copy with every valence sign-flipped (test hook for the
  // antisymmetry property).
  SentimentLexicon negated() const;

private:
  std::unordered_map<std::string, double> valences_;
  bool loaded_ = false;
};

// Sum of matched token valences, each scaled by boosters in the preceding
// 3-token window and sign-flipped when "not" appears in that window, then
// squashed to [-1, 1] via s / sqrt(s^2 + 15).
PolarityScore polarity(std::string_view sentence,
                       const SentimentLexicon& lexicon);

// Strict sign rule: > 0 positive, = 0 neutral, < 0 negative.
SentimentLabel classify_sentence(PolarityScore score);

const char* to_string(SentimentLabel label);

}  // namespace revagg
