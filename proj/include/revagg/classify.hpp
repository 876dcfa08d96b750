#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "revagg/corpus.hpp"

namespace revagg {

// Six classical classifiers for accept/reject prediction. All training is
// deterministic given (spec, data, seed); retraining reproduces models
// bit-for-bit, random forests included.

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // row-major

  static Matrix zeros(std::size_t r, std::size_t c) {
    return {r, c, std::vector<double>(r * c, 0.0)};
  }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::span<const double> row(std::size_t r) const {
    return {data.data() + r * cols, cols};
  }
};

// Labels: Accept = 1 (positive class), Reject = 0.
struct LabeledDataset {
  Matrix features;
  std::vector<int> labels;
  std::vector<std::string> paper_ids;

  std::size_t size() const { return labels.size(); }
};

enum class ModelKind {
  Knn,
  DecisionTree,
  RandomForest,
  LogisticRegression,
  NaiveBayes,
  LinearSvm,
};

const char* to_string(ModelKind kind);

struct ModelSpec {
  ModelKind kind = ModelKind::DecisionTree;
  int k = 5;        // KNN neighbors (odd by default)
  int trees = 100;  // forest size
  std::uint64_t seed = 0;

  // Human-readable label used in reports ("KNN (K = 5)", "Decision Tree", ...).
  std::string label() const;
};

// ---- learned parameters ------------------------------------------------------

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  int label = -1;
  int left = -1;
  int right = -1;
};

struct TreeParams {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct ForestParams {
  std::vector<TreeParams> trees;
};

struct KnnParams {
  int k = 5;  // after clamping to the training-set size
  Matrix train_features;
  std::vector<int> train_labels;
};

struct LinearParams {
  std::vector<double> weights;
  double bias = 0.0;
};

struct GaussianNbParams {
  std::array<double, 2> log_prior = {0.0, 0.0};  // [reject, accept]
  std::array<bool, 2> class_present = {false, false};
  std::array<std::vector<double>, 2> mean;
  std::array<std::vector<double>, 2> variance;  // smoothing already added
};

using ModelParams = std::variant<KnnParams, TreeParams, ForestParams,
                                 LinearParams, GaussianNbParams>;

struct Model {
  ModelSpec spec;
  std::size_t dim = 0;
  std::vector<std::string> notes;  // e.g. "k clamped from 5 to 3"
  ModelParams params;
};

// ---- train / predict / evaluate ----------------------------------------------

// Deterministic training. Throws ArgumentError on empty data or zero
// dimension, DegenerateTrainingError when logistic regression or the linear
// SVM sees a single class.
Model train(const ModelSpec& spec, const LabeledDataset& data);

// One label per row. Throws ArgumentError on dimension mismatch. KNN breaks
// distance ties by the smaller training row index and vote ties toward
// Reject; linear models map non-positive margins to Reject.
std::vector<int> predict(const Model& model, const Matrix& features);

struct EvalResult {
  double accuracy = 0.0;
  double f1 = 0.0;  // binary, Accept positive
  long tp = 0, fp = 0, fn = 0, tn = 0;

  bool operator==(const EvalResult&) const = default;
};

EvalResult evaluate(const Model& model, const LabeledDataset& test);

// Metric arithmetic on an explicit confusion matrix.
EvalResult eval_from_confusion(long tp, long fp, long fn, long tn);

std::string eval_to_json(const EvalResult& r);
std::string eval_csv_row(const EvalResult& r);

// Versioned JSON round-trip for trained models.
std::string model_to_json(const Model& model);
Model model_from_json(std::string_view text);

}  // namespace revagg
