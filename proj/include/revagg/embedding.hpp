#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "revagg/corpus.hpp"

namespace revagg {

// Text-embedding boundary. Transformer embeddings arrive through a
// precomputed store file; a seeded hashing provider stands in when no store
// is available so pipelines stay runnable end to end.

class EmbeddingProvider {
public:
  virtual ~EmbeddingProvider() = default;
  virtual const std::string& name() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::vector<double> embed(std::string_view text) const = 0;
};

// File format: first line "dim=<D>", then one entry per line:
//   sha256(text_utf8)<TAB>v1,v2,...,vD
// Lookup is by content hash of the exact input text.
class PrecomputedStore : public EmbeddingProvider {
public:
  static std::shared_ptr<PrecomputedStore> load(const std::string& path);

  const std::string& name() const override { return name_; }
  std::size_t dimension() const override { return dimension_; }
  // Throws StoreLookupError when the text's hash is not in the store.
  std::vector<double> embed(std::string_view text) const override;

  std::size_t entry_count() const { return vectors_.size(); }

private:
  std::string name_;
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::vector<double>> vectors_;
};

// Deterministic stand-in: each preprocessed token maps to a seeded-hash unit
// vector and the text embeds as the mean of its token vectors (the averaging
// scheme used for word-vector sentence embeddings). Empty token list gives
// the zero vector.
class FallbackProvider : public EmbeddingProvider {
public:
  FallbackProvider(std::size_t dimension, std::uint64_t seed);

  const std::string& name() const override { return name_; }
  std::size_t dimension() const override { return dimension_; }
  std::vector<double> embed(std::string_view text) const override;

  std::uint64_t seed() const { return seed_; }

private:
  std::string name_;
  std::size_t dimension_;
  std::uint64_t seed_;
};

std::vector<double> fallback_embed(std::string_view text,
                                   std::size_t dimension, std::uint64_t seed);

// ---- feature assembly -------------------------------------------------------

struct FeatureSubset {
  bool title = false;
  bool abstract = false;
  bool review = false;
  bool recommendation = false;
  bool confidence = false;

  bool operator==(const FeatureSubset&) const = default;
  bool any() const {
    return title || abstract || review || recommendation || confidence;
  }
  std::string label() const;
};

struct FeatureSegment {
  std::string field;
  std::size_t offset = 0;
  std::size_t length = 0;

  bool operator==(const FeatureSegment&) const = default;
};

struct FeatureVector {
  std::string paper_id;
  std::vector<double> values;
  std::vector<FeatureSegment> layout;  // title, abstract, review, rec, conf
};

inline constexpr std::size_t kDefaultMaxReviews = 8;

// Field order is fixed: title, abstract, review (each provider-dimension
// wide), then recommendation and confidence as max_reviews score slots in
// review order, zero-padded. Throws MissingFeatureError when an enabled text
// field is empty or an enabled score is carried by no review.
FeatureVector assemble_features(const PaperRecord& paper,
                                const FeatureSubset& subset,
                                const EmbeddingProvider& provider,
                                std::size_t max_reviews = kDefaultMaxReviews);

std::string feature_vector_csv_row(const FeatureVector& fv,
                                   const std::optional<Decision>& label);

}  // namespace revagg
