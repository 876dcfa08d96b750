#include "revagg/sentiment.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "revagg/errors.hpp"
#include "revagg/textproc.hpp"
#include "revagg/util.hpp"

#include "lexicon_data.inc"

namespace revagg {

namespace {

constexpr double kNormalizationAlpha = 15.0;
constexpr double kBoosterStep = 0.293;
constexpr int kWindow = 3;
// Booster influence decays with distance from the matched token.
constexpr double kDistanceDamp[kWindow] = {1.00, 0.95, 0.90};

// Must match the lists documented in the lexicon file header.
const std::unordered_set<std::string>& intensifiers() {
  static const std::unordered_set<std::string> words = {
      "very",       "extremely",  "really",        "absolutely",
      "completely", "highly",     "incredibly",    "remarkably",
      "exceptionally", "particularly", "especially", "totally",
      "utterly",    "deeply",     "strongly",      "substantially",
      "significantly", "truly"};
  return words;
}

const std::unordered_set<std::string>& dampeners() {
  static const std::unordered_set<std::string> words = {
      "slightly", "somewhat", "barely",     "hardly",
      "marginally", "mildly", "moderately", "partially"};
  return words;
}

}  // namespace

const SentimentLexicon& SentimentLexicon::bundled() {
  static const SentimentLexicon lexicon = parse(kLexiconData);
  return lexicon;
}

SentimentLexicon SentimentLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

SentimentLexicon SentimentLexicon::parse(std::string_view content) {
  SentimentLexicon lex;
  std::istringstream in{std::string(content)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ConfigError("lexicon line " + std::to_string(line_no) +
                        " has no tab separator");
    }
    std::string token = trim(line.substr(0, tab));
    double valence = 0.0;
    try {
      valence = std::stod(line.substr(tab + 1));
    } catch (const std::exception&) {
      throw ConfigError("lexicon line " + std::to_string(line_no) +
                        " has a non-numeric valence");
    }
    if (!std::isfinite(valence)) {
      throw ConfigError("lexicon line " + std::to_string(line_no) +
                        " has a non-finite valence");
    }
    lex.valences_[token] = valence;
  }
  lex.loaded_ = true;
  return lex;
}

SentimentLexicon SentimentLexicon::from_entries(
    std::unordered_map<std::string, double> entries) {
  SentimentLexicon lex;
  lex.valences_ = std::move(entries);
  lex.loaded_ = true;
  return lex;
}

std::optional<double> SentimentLexicon::valence(const std::string& token) const {
  auto it = valences_.find(token);
  if (it == valences_.end()) return std::nullopt;
  return it->second;
}

SentimentLexicon SentimentLexicon::negated() const {
  SentimentLexicon lex = *this;
  for (auto& [token, valence] : lex.valences_) valence = -valence;
  return lex;
}

PolarityScore polarity(std::string_view sentence,
                       const SentimentLexicon& lexicon) {
  if (!lexicon.loaded()) {
    throw ConfigError("sentiment lexicon not loaded");
  }
  TokenList tokens = tokenize_words(sentence);
  double sum = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto valence = lexicon.valence(tokens[i]);
    if (!valence) continue;
    double contribution = *valence;
    bool negate = false;
    for (int back = 1; back <= kWindow && back <= static_cast<int>(i); ++back) {
      const std::string& prev = tokens[i - back];
      double damp = kDistanceDamp[back - 1];
      if (prev == "not") {
        negate = true;
      } else if (intensifiers().count(prev)) {
        contribution *= 1.0 + kBoosterStep * damp;
      } else if (dampeners().count(prev)) {
        contribution *= 1.0 - kBoosterStep * damp;
      }
    }
    if (negate) contribution = -contribution;
    sum += contribution;
  }
  double value = sum / std::sqrt(sum * sum + kNormalizationAlpha);
  return PolarityScore{value};
}

SentimentLabel classify_sentence(PolarityScore score) {
  if (score.value > 0.0) return SentimentLabel::Positive;
  if (score.value < 0.0) return SentimentLabel::Negative;
  return SentimentLabel::Neutral;
}

const char* to_string(SentimentLabel label) {
  switch (label) {
    case SentimentLabel::Positive: return "positive";
    case SentimentLabel::Negative: return "negative";
    case SentimentLabel::Neutral: return "neutral";
  }
  return "neutral";
}

}  // namespace revagg
