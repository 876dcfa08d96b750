#include "revagg/ablation.hpp"

#include <algorithm>
#include <sstream>

#include "revagg/errors.hpp"
#include "revagg/util.hpp"

namespace revagg {

const char* to_string(StudyId id) {
  switch (id) {
    case StudyId::Study1: return "study1";
    case StudyId::Study2: return "study2";
    case StudyId::Study3: return "study3";
  }
  return "?";
}

FeatureSubset feature_subset_for(int experiment) {
  switch (experiment) {
    case 1: return {true, true, true, true, true};
    case 2: return {true, true, true, true, false};
    case 3: return {true, true, true, false, false};
    case 4: return {false, false, true, true, true};
    case 5: return {false, false, true, true, false};
    case 6: return {false, false, true, false, false};
    case 7: return {true, false, true, true, true};
    default:
      throw ArgumentError("feature_subset_for: experiment must be 1..7, got " +
                          std::to_string(experiment));
  }
}

std::vector<ModelSpec> default_classifier_specs() {
  return {
      {ModelKind::Knn, 5, 100, 0},
      {ModelKind::DecisionTree, 5, 100, 0},
      {ModelKind::RandomForest, 5, 100, 0},
      {ModelKind::LogisticRegression, 5, 100, 0},
      {ModelKind::NaiveBayes, 5, 100, 0},
      {ModelKind::LinearSvm, 5, 100, 0},
  };
}

StudySplit make_study_split(const StudyConfig& config, std::uint64_t seed) {
  StudySplit split;
  switch (config.id) {
    case StudyId::Study1: {
      Corpus labeled = filter_labeled(config.corpus_a);
      SplitResult parts =
          split_dataset(labeled, config.train_fraction, 0.0, seed);
      split.train = std::move(parts.train);
      split.test = std::move(parts.test);
      break;
    }
    case StudyId::Study2: {
      if (!config.corpus_b) {
        throw ArgumentError("study2 needs a second corpus for testing");
      }
      split.train = filter_labeled(config.corpus_a);
      split.test = filter_labeled(*config.corpus_b);
      break;
    }
    case StudyId::Study3: {
      if (!config.corpus_b) {
        throw ArgumentError("study3 needs a second corpus to merge");
      }
      Corpus merged = merge_corpora({config.corpus_a, *config.corpus_b});
      Corpus labeled = filter_labeled(merged);
      SplitResult parts =
          split_dataset(labeled, config.train_fraction, 0.0, seed);
      split.train = std::move(parts.train);
      split.test = std::move(parts.test);
      break;
    }
  }
  return split;
}

namespace {

// Per-cell seed independent of grid iteration order.
std::uint64_t cell_seed(std::uint64_t master, int experiment,
                        const std::string& provider,
                        const std::string& classifier) {
  std::string key = std::to_string(experiment) + "|" + provider + "|" + classifier;
  return SplitMix64(master ^ fnv1a64(key)).next();
}

LabeledDataset build_dataset(const Corpus& corpus, const FeatureSubset& subset,
                             const EmbeddingProvider& provider) {
  LabeledDataset data;
  bool first = true;
  for (const auto& paper : corpus.papers) {
    FeatureVector fv = assemble_features(paper, subset, provider);
    if (first) {
      data.features.cols = fv.values.size();
      first = false;
    } else if (fv.values.size() != data.features.cols) {
      throw MissingFeatureError("paper " + paper.id +
                                ": inconsistent feature length");
    }
    data.features.data.insert(data.features.data.end(), fv.values.begin(),
                              fv.values.end());
    ++data.features.rows;
    data.labels.push_back(*paper.decision == Decision::Accept ? 1 : 0);
    data.paper_ids.push_back(paper.id);
  }
  return data;
}

}  // namespace

AblationReport run_ablation(
    const StudyConfig& config,
    const std::vector<std::shared_ptr<EmbeddingProvider>>& providers,
    const std::vector<ModelSpec>& classifiers, std::uint64_t seed) {
  if (providers.empty()) throw ArgumentError("run_ablation: no providers");
  if (classifiers.empty()) throw ArgumentError("run_ablation: no classifiers");

  StudySplit split = make_study_split(config, seed);

  AblationReport report;
  report.study = config.id;
  report.seed = seed;
  report.train_checksum = corpus_checksum(split.train);
  report.test_checksum = corpus_checksum(split.test);
  for (const auto& p : providers) report.providers.push_back(p->name());
  for (const auto& c : classifiers) report.classifiers.push_back(c.label());

  for (int experiment = 1; experiment <= kExperimentCount; ++experiment) {
    FeatureSubset subset = feature_subset_for(experiment);
    for (const auto& provider : providers) {
      // Feature matrices are shared by every classifier of this cell column.
      LabeledDataset train_data;
      LabeledDataset test_data;
      std::string column_error;
      try {
        train_data = build_dataset(split.train, subset, *provider);
        test_data = build_dataset(split.test, subset, *provider);
      } catch (const Error& e) {
        column_error = e.what();
      }
      for (const auto& classifier : classifiers) {
        AblationCell cell;
        cell.experiment = experiment;
        cell.provider = provider->name();
        cell.classifier = classifier.label();
        cell.n_train = split.train.papers.size();
        cell.n_test = split.test.papers.size();
        if (!column_error.empty()) {
          cell.skipped_reason = column_error;
          report.cells.push_back(std::move(cell));
          continue;
        }
        try {
          ModelSpec spec = classifier;
          spec.seed = cell_seed(seed, experiment, provider->name(),
                                classifier.label());
          Model model = train(spec, train_data);
          cell.result = evaluate(model, test_data);
        } catch (const Error& e) {
          cell.skipped_reason = e.what();
        }
        report.cells.push_back(std::move(cell));
      }
    }
  }
  return report;
}

namespace {

std::string percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", fraction * 100.0);
  return buf;
}

const AblationCell* find_cell(const AblationReport& report, int experiment,
                              const std::string& provider,
                              const std::string& classifier) {
  for (const auto& cell : report.cells) {
    if (cell.experiment == experiment && cell.provider == provider &&
        cell.classifier == classifier) {
      return &cell;
    }
  }
  return nullptr;
}

}  // namespace

std::string render_report_markdown(const AblationReport& report) {
  std::ostringstream out;
  out << "# Ablation report (" << to_string(report.study) << ")\n\n";
  out << "seed: " << report.seed << "  \n";
  out << "train checksum: " << report.train_checksum << "  \n";
  out << "test checksum: " << report.test_checksum << "\n";

  for (int experiment = 1; experiment <= kExperimentCount; ++experiment) {
    out << "\n## Experiment " << experiment << " ("
        << feature_subset_for(experiment).label() << ")\n\n";
    out << "| Classifier |";
    for (const auto& provider : report.providers) {
      out << " " << provider << " ACC (%) | " << provider << " F1 (%) |";
    }
    out << "\n|---|";
    for (std::size_t i = 0; i < report.providers.size(); ++i) out << "---|---|";
    out << "\n";
    for (const auto& classifier : report.classifiers) {
      out << "| " << classifier << " |";
      for (const auto& provider : report.providers) {
        const AblationCell* cell =
            find_cell(report, experiment, provider, classifier);
        if (cell != nullptr && cell->result) {
          out << " " << percent(cell->result->accuracy) << " | "
              << percent(cell->result->f1) << " |";
        } else {
          out << " skipped | skipped |";
        }
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string render_report_csv(const AblationReport& report) {
  std::ostringstream out;
  out << "# study=" << to_string(report.study) << " seed=" << report.seed
      << " train_checksum=" << report.train_checksum
      << " test_checksum=" << report.test_checksum << "\n";
  out << "experiment,provider,classifier,accuracy,f1,n_train,n_test,"
         "skipped_reason\n";
  for (const auto& cell : report.cells) {
    out << csv_row({std::to_string(cell.experiment), cell.provider,
                    cell.classifier,
                    cell.result ? format_double(cell.result->accuracy) : "",
                    cell.result ? format_double(cell.result->f1) : "",
                    std::to_string(cell.n_train), std::to_string(cell.n_test),
                    cell.skipped_reason})
        << "\n";
  }
  return out.str();
}

AblationReport parse_report_csv(std::string_view text) {
  AblationReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string item;
      while (meta >> item) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        if (key == "study") {
          if (value == "study1") report.study = StudyId::Study1;
          else if (value == "study2") report.study = StudyId::Study2;
          else if (value == "study3") report.study = StudyId::Study3;
        } else if (key == "seed") {
          report.seed = std::stoull(value);
        } else if (key == "train_checksum") {
          report.train_checksum = value;
        } else if (key == "test_checksum") {
          report.test_checksum = value;
        }
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;  // column header row
      continue;
    }
    std::vector<std::string> fields = parse_csv_row(line);
    if (fields.size() != 8) {
      throw ParseError("report csv row with " + std::to_string(fields.size()) +
                           " fields",
                       0);
    }
    AblationCell cell;
    cell.experiment = std::stoi(fields[0]);
    cell.provider = fields[1];
    cell.classifier = fields[2];
    if (!fields[3].empty()) {
      EvalResult r;
      r.accuracy = std::stod(fields[3]);
      r.f1 = std::stod(fields[4]);
      cell.result = r;
    }
    cell.n_train = std::stoul(fields[5]);
    cell.n_test = std::stoul(fields[6]);
    cell.skipped_reason = fields[7];
    if (std::find(report.providers.begin(), report.providers.end(),
                  cell.provider) == report.providers.end()) {
      report.providers.push_back(cell.provider);
    }
    if (std::find(report.classifiers.begin(), report.classifiers.end(),
                  cell.classifier) == report.classifiers.end()) {
      report.classifiers.push_back(cell.classifier);
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace revagg
