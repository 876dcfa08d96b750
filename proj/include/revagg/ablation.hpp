#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "revagg/classify.hpp"
#include "revagg/corpus.hpp"
#include "revagg/embedding.hpp"

namespace revagg {

// Experiment grid: seven feature subsets x embedding providers x classifiers,
// across three train/test study shapes. One split is shared by every cell of
// a study so classifiers compete on identical data.

enum class StudyId { Study1, Study2, Study3 };

const char* to_string(StudyId id);

struct StudyConfig {
  StudyId id = StudyId::Study1;
  Corpus corpus_a;                  // Study1: split 80/20; Study2: train side
  std::optional<Corpus> corpus_b;   // Study2: test side; Study3: merged in
  double train_fraction = 0.8;
};

// The seven feature subsets of the experiment grid, by experiment number:
//   1 title+abstract+review+rec+conf   2 drops conf   3 text fields only
//   4 review+rec+conf                  5 review+rec   6 review only
//   7 title+review+rec+conf
FeatureSubset feature_subset_for(int experiment);

inline constexpr int kExperimentCount = 7;

struct AblationCell {
  int experiment = 0;
  std::string provider;
  std::string classifier;
  std::optional<EvalResult> result;  // absent when skipped
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::string skipped_reason;        // empty when the cell ran
};

struct AblationReport {
  StudyId study = StudyId::Study1;
  std::uint64_t seed = 0;
  std::string train_checksum;
  std::string test_checksum;
  std::string timestamp;  // informational only; never rendered into csv/md
  std::vector<std::string> providers;
  std::vector<std::string> classifiers;
  std::vector<AblationCell> cells;
};

// The six default classifier specs of the grid (seeds filled in per cell).
std::vector<ModelSpec> default_classifier_specs();

struct StudySplit {
  Corpus train;
  Corpus test;
};

// Labeled papers only; Study1/3 split by seed, Study2 trains on A and tests
// on B. Study3 merges A and B before splitting.
StudySplit make_study_split(const StudyConfig& config, std::uint64_t seed);

// Runs every (experiment, provider, classifier) cell on the shared split.
// Cells whose feature subset cannot be assembled (missing scores, empty
// fields, degenerate training data) are marked skipped and the run continues.
AblationReport run_ablation(
    const StudyConfig& config,
    const std::vector<std::shared_ptr<EmbeddingProvider>>& providers,
    const std::vector<ModelSpec>& classifiers, std::uint64_t seed);

// Markdown tables grouped per experiment, ACC%/F1% columns per provider.
std::string render_report_markdown(const AblationReport& report);

// CSV schema: experiment,provider,classifier,accuracy,f1,n_train,n_test,
// skipped_reason. Header metadata rides in '#' comment lines.
std::string render_report_csv(const AblationReport& report);

// Parses render_report_csv output back (cell values and metadata).
AblationReport parse_report_csv(std::string_view text);

}  // namespace revagg
