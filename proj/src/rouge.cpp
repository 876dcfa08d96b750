#include "revagg/rouge.hpp"

#include <unordered_map>

#include "revagg/errors.hpp"
#include "revagg/util.hpp"

namespace revagg {

const char* to_string(RougeVariant v) {
  switch (v) {
    case RougeVariant::N1: return "rouge1";
    case RougeVariant::N2: return "rouge2";
    case RougeVariant::L: return "rougeL";
    case RougeVariant::Lsum: return "rougeLsum";
  }
  return "?";
}

TokenList rouge_tokenize(std::string_view text) {
  TokenList out;
  for (auto& token : tokenize_words(text)) {
    out.push_back(porter_stem(token));
  }
  return out;
}

namespace {

RougeScores make_scores(double matches, double candidate_total,
                        double reference_total, RougeVariant variant) {
  RougeScores s;
  s.variant = variant;
  s.degenerate = candidate_total == 0.0 || reference_total == 0.0;
  s.precision = candidate_total == 0.0 ? 0.0 : matches / candidate_total;
  s.recall = reference_total == 0.0 ? 0.0 : matches / reference_total;
  s.fmeasure = s.precision + s.recall == 0.0
                   ? 0.0
                   : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

std::unordered_map<std::string, std::size_t> ngram_counts(
    const TokenList& tokens, std::size_t n) {
  std::unordered_map<std::string, std::size_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (std::size_t j = 1; j < n; ++j) {
      gram.push_back('\x1f');
      gram += tokens[i + j];
    }
    ++counts[gram];
  }
  return counts;
}

}  // namespace

RougeScores rouge_n(std::string_view candidate, std::string_view reference,
                    std::size_t n) {
  if (n < 1) throw ArgumentError("rouge_n: n must be >= 1");
  TokenList cand = rouge_tokenize(candidate);
  TokenList ref = rouge_tokenize(reference);
  auto cand_grams = ngram_counts(cand, n);
  auto ref_grams = ngram_counts(ref, n);

  std::size_t matches = 0;
  std::size_t ref_total = 0;
  for (const auto& [gram, count] : ref_grams) {
    ref_total += count;
    auto it = cand_grams.find(gram);
    if (it != cand_grams.end()) matches += std::min(count, it->second);
  }
  std::size_t cand_total = 0;
  for (const auto& [gram, count] : cand_grams) cand_total += count;

  RougeVariant variant = n == 1 ? RougeVariant::N1 : RougeVariant::N2;
  return make_scores(static_cast<double>(matches),
                     static_cast<double>(cand_total),
                     static_cast<double>(ref_total), variant);
}

std::size_t lcs_length(const TokenList& a, const TokenList& b) {
  std::size_t m = a.size();
  std::size_t n = b.size();
  if (m == 0 || n == 0) return 0;
  // rolling rows of the classic table
  std::vector<std::size_t> prev(n + 1, 0);
  std::vector<std::size_t> cur(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (a[i - 1] == b[j - 1]) {
        cur[j] = prev[j - 1] + 1;
      } else {
        cur[j] = std::max(prev[j], cur[j - 1]);
      }
    }
    prev.swap(cur);
  }
  return prev[n];
}

std::vector<std::size_t> lcs_match_positions(const TokenList& reference,
                                             const TokenList& candidate) {
  std::size_t m = reference.size();
  std::size_t n = candidate.size();
  std::vector<std::vector<std::size_t>> table(m + 1,
                                              std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (reference[i - 1] == candidate[j - 1]) {
        table[i][j] = table[i - 1][j - 1] + 1;
      } else {
        table[i][j] = std::max(table[i - 1][j], table[i][j - 1]);
      }
    }
  }
  std::vector<std::size_t> positions;
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 && j > 0) {
    if (reference[i - 1] == candidate[j - 1]) {
      positions.push_back(i - 1);
      --i;
      --j;
    } else if (table[i][j - 1] > table[i - 1][j]) {
      --j;
    } else {
      --i;  // ties skip a reference token
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

RougeScores rouge_l(std::string_view candidate, std::string_view reference) {
  TokenList cand = rouge_tokenize(candidate);
  TokenList ref = rouge_tokenize(reference);
  auto lcs = static_cast<double>(lcs_length(ref, cand));
  return make_scores(lcs, static_cast<double>(cand.size()),
                     static_cast<double>(ref.size()), RougeVariant::L);
}

RougeScores rouge_lsum(std::string_view candidate, std::string_view reference) {
  std::vector<TokenList> cand_sents;
  for (const auto& s : sentence_tokenize(candidate)) {
    TokenList tokens = rouge_tokenize(s.text);
    if (!tokens.empty()) cand_sents.push_back(std::move(tokens));
  }
  std::vector<TokenList> ref_sents;
  for (const auto& s : sentence_tokenize(reference)) {
    TokenList tokens = rouge_tokenize(s.text);
    if (!tokens.empty()) ref_sents.push_back(std::move(tokens));
  }

  std::size_t cand_total = 0;
  std::unordered_map<std::string, long> cand_budget;
  for (const auto& sent : cand_sents) {
    cand_total += sent.size();
    for (const auto& token : sent) ++cand_budget[token];
  }
  std::size_t ref_total = 0;
  std::unordered_map<std::string, long> ref_budget;
  for (const auto& sent : ref_sents) {
    ref_total += sent.size();
    for (const auto& token : sent) ++ref_budget[token];
  }

  // Union of canonical LCS positions per reference sentence, then clip by
  // both sides' remaining token budgets so nothing is double counted.
  std::size_t hits = 0;
  for (const auto& ref_sent : ref_sents) {
    std::vector<bool> in_union(ref_sent.size(), false);
    for (const auto& cand_sent : cand_sents) {
      for (std::size_t pos : lcs_match_positions(ref_sent, cand_sent)) {
        in_union[pos] = true;
      }
    }
    for (std::size_t pos = 0; pos < ref_sent.size(); ++pos) {
      if (!in_union[pos]) continue;
      const std::string& token = ref_sent[pos];
      auto ref_it = ref_budget.find(token);
      auto cand_it = cand_budget.find(token);
      if (ref_it != ref_budget.end() && ref_it->second > 0 &&
          cand_it != cand_budget.end() && cand_it->second > 0) {
        ++hits;
        --ref_it->second;
        --cand_it->second;
      }
    }
  }

  return make_scores(static_cast<double>(hits),
                     static_cast<double>(cand_total),
                     static_cast<double>(ref_total), RougeVariant::Lsum);
}

RougeScores mean_scores(const std::vector<RougeScores>& scores) {
  if (scores.empty()) throw ArgumentError("mean_scores: empty list");
  RougeScores mean;
  mean.variant = scores[0].variant;
  for (const auto& s : scores) {
    if (s.variant != mean.variant) {
      throw ArgumentError("mean_scores: mixed variants");
    }
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.fmeasure += s.fmeasure;
    mean.degenerate = mean.degenerate || s.degenerate;
  }
  auto n = static_cast<double>(scores.size());
  mean.precision /= n;
  mean.recall /= n;
  mean.fmeasure /= n;
  return mean;
}

double coleman_liau(std::string_view text) {
  std::size_t words = count_words(text);
  if (words == 0) throw ArgumentError("coleman_liau: no words");
  std::size_t letters = 0;
  for (char c : text) {
    if (is_ascii_alnum(c)) ++letters;
  }
  std::size_t sentences = sentence_tokenize(text).size();
  if (sentences == 0) sentences = 1;

  double per_words = static_cast<double>(words);
  double l = static_cast<double>(letters) / per_words * 100.0;
  double s = static_cast<double>(sentences) / per_words * 100.0;
  return 0.0588 * l - 0.296 * s - 15.8;
}

}  // namespace revagg
