#include "revagg/embedding.hpp"

#include <cmath>
#include <fstream>

#include "revagg/errors.hpp"
#include "revagg/textproc.hpp"
#include "revagg/util.hpp"

namespace revagg {

// ---- PrecomputedStore --------------------------------------------------------

std::shared_ptr<PrecomputedStore> PrecomputedStore::load(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open embedding store: " + path);

  auto store = std::make_shared<PrecomputedStore>();
  std::size_t slash = path.find_last_of("/\\");
  store->name_ = "store:" + (slash == std::string::npos
                                 ? path
                                 : path.substr(slash + 1));

  std::string line;
  if (!std::getline(in, line) || line.rfind("dim=", 0) != 0) {
    throw ConfigError("embedding store missing dim= header: " + path);
  }
  try {
    store->dimension_ = std::stoul(line.substr(4));
  } catch (const std::exception&) {
    throw ConfigError("embedding store has a bad dim= header: " + path);
  }
  if (store->dimension_ == 0) {
    throw ConfigError("embedding store declares dimension 0: " + path);
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab != 64) {
      throw ConfigError("store line " + std::to_string(line_no) +
                        ": expected sha256<TAB>values");
    }
    std::string key = line.substr(0, 64);
    std::vector<double> values;
    values.reserve(store->dimension_);
    std::size_t pos = tab + 1;
    while (pos <= line.size()) {
      std::size_t comma = line.find(',', pos);
      std::string field = line.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        values.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw ConfigError("store line " + std::to_string(line_no) +
                          ": bad number '" + field + "'");
      }
      if (!std::isfinite(values.back())) {
        throw ConfigError("store line " + std::to_string(line_no) +
                          ": non-finite value");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (values.size() != store->dimension_) {
      throw ConfigError("store line " + std::to_string(line_no) + ": entry has " +
                        std::to_string(values.size()) + " values, declared dim " +
                        std::to_string(store->dimension_));
    }
    store->vectors_[key] = std::move(values);
  }
  return store;
}

std::vector<double> PrecomputedStore::embed(std::string_view text) const {
  auto it = vectors_.find(sha256_hex(text));
  if (it == vectors_.end()) {
    throw StoreLookupError(name_ + ": no vector for text of length " +
                           std::to_string(text.size()));
  }
  return it->second;
}

// ---- FallbackProvider --------------------------------------------------------

FallbackProvider::FallbackProvider(std::size_t dimension, std::uint64_t seed)
    : name_("fallback:" + std::to_string(dimension)),
      dimension_(dimension),
      seed_(seed) {
  if (dimension < 1) throw ArgumentError("fallback provider: dimension < 1");
}

std::vector<double> FallbackProvider::embed(std::string_view text) const {
  return fallback_embed(text, dimension_, seed_);
}

std::vector<double> fallback_embed(std::string_view text,
                                   std::size_t dimension, std::uint64_t seed) {
  if (dimension < 1) throw ArgumentError("fallback_embed: dimension < 1");
  TokenList tokens = preprocess(text);
  std::vector<double> sum(dimension, 0.0);
  if (tokens.empty()) return sum;

  std::vector<double> token_vec(dimension);
  for (const auto& token : tokens) {
    SplitMix64 rng(fnv1a64(token) ^ (seed * 0x9e3779b97f4a7c15ULL));
    double norm_sq = 0.0;
    for (std::size_t d = 0; d < dimension; ++d) {
      token_vec[d] = 2.0 * rng.next_double() - 1.0;
      norm_sq += token_vec[d] * token_vec[d];
    }
    double norm = std::sqrt(norm_sq);
    if (norm > 0.0) {
      for (std::size_t d = 0; d < dimension; ++d) token_vec[d] /= norm;
    }
    for (std::size_t d = 0; d < dimension; ++d) sum[d] += token_vec[d];
  }
  for (std::size_t d = 0; d < dimension; ++d) {
    sum[d] /= static_cast<double>(tokens.size());
  }
  return sum;
}

// ---- feature assembly --------------------------------------------------------

std::string FeatureSubset::label() const {
  std::vector<std::string> parts;
  if (title) parts.push_back("title");
  if (abstract) parts.push_back("abstract");
  if (review) parts.push_back("review");
  if (recommendation) parts.push_back("recommendation");
  if (confidence) parts.push_back("confidence");
  return join(parts, "+");
}

FeatureVector assemble_features(const PaperRecord& paper,
                                const FeatureSubset& subset,
                                const EmbeddingProvider& provider,
                                std::size_t max_reviews) {
  if (!subset.any()) {
    throw ArgumentError("assemble_features: empty feature subset");
  }
  if (max_reviews < 1) {
    throw ArgumentError("assemble_features: max_reviews < 1");
  }

  FeatureVector fv;
  fv.paper_id = paper.id;

  auto append_embedding = [&](const char* field, const std::string& text) {
    if (trim(text).empty()) {
      throw MissingFeatureError("paper " + paper.id + ": empty " + field);
    }
    std::vector<double> vec = provider.embed(text);
    if (vec.size() != provider.dimension()) {
      throw ConfigError(provider.name() + " returned " +
                        std::to_string(vec.size()) + " values, declared " +
                        std::to_string(provider.dimension()));
    }
    fv.layout.push_back({field, fv.values.size(), vec.size()});
    fv.values.insert(fv.values.end(), vec.begin(), vec.end());
  };

  auto append_scores = [&](const char* field, auto getter) {
    bool any_present = false;
    std::vector<double> slots(max_reviews, 0.0);
    std::size_t n = std::min(max_reviews, paper.reviews.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (auto score = getter(paper.reviews[i])) {
        slots[i] = static_cast<double>(*score);
        any_present = true;
      }
    }
    if (!any_present) {
      throw MissingFeatureError("paper " + paper.id + ": no review carries " +
                                field);
    }
    fv.layout.push_back({field, fv.values.size(), slots.size()});
    fv.values.insert(fv.values.end(), slots.begin(), slots.end());
  };

  if (subset.title) append_embedding("title", paper.title);
  if (subset.abstract) append_embedding("abstract", paper.abstract_text);
  if (subset.review) {
    if (paper.reviews.empty()) {
      throw MissingFeatureError("paper " + paper.id + ": no reviews");
    }
    append_embedding("review", merge_reviews(paper, max_reviews));
  }
  if (subset.recommendation) {
    append_scores("recommendation",
                  [](const ReviewRecord& r) { return r.recommendation; });
  }
  if (subset.confidence) {
    append_scores("confidence",
                  [](const ReviewRecord& r) { return r.confidence; });
  }
  return fv;
}

std::string feature_vector_csv_row(const FeatureVector& fv,
                                   const std::optional<Decision>& label) {
  std::vector<std::string> fields;
  fields.reserve(fv.values.size() + 2);
  fields.push_back(fv.paper_id);
  fields.push_back(label ? to_string(*label) : "");
  for (double v : fv.values) fields.push_back(format_double(v));
  return csv_row(fields);
}

}  // namespace revagg
