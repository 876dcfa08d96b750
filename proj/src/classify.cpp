#include "revagg/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "revagg/errors.hpp"
#include "revagg/util.hpp"

namespace revagg {

using nlohmann::json;

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Knn: return "knn";
    case ModelKind::DecisionTree: return "decision_tree";
    case ModelKind::RandomForest: return "random_forest";
    case ModelKind::LogisticRegression: return "logistic_regression";
    case ModelKind::NaiveBayes: return "naive_bayes";
    case ModelKind::LinearSvm: return "linear_svm";
  }
  return "unknown";
}

std::string ModelSpec::label() const {
  switch (kind) {
    case ModelKind::Knn: return "KNN (K = " + std::to_string(k) + ")";
    case ModelKind::DecisionTree: return "Decision Tree";
    case ModelKind::RandomForest: return "Random Forest";
    case ModelKind::LogisticRegression: return "Logistic Regression";
    case ModelKind::NaiveBayes: return "Naive Bayes";
    case ModelKind::LinearSvm: return "SVM Linear";
  }
  return "?";
}

namespace {

int majority_label(const std::vector<int>& labels,
                   const std::vector<std::size_t>& idx) {
  long accept = 0;
  for (std::size_t i : idx) accept += labels[i];
  long reject = static_cast<long>(idx.size()) - accept;
  return accept > reject ? 1 : 0;  // ties toward Reject
}

bool single_class(const std::vector<int>& labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i] != labels[0]) return false;
  }
  return true;
}

// ---- CART tree ---------------------------------------------------------------

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double gini = std::numeric_limits<double>::infinity();
};

double gini_pair(long accept, long total) {
  if (total == 0) return 0.0;
  double p = static_cast<double>(accept) / static_cast<double>(total);
  return 2.0 * p * (1.0 - p);
}

// Weighted Gini of the best threshold on one feature, scanned over sorted
// values. Candidate thresholds are midpoints between distinct neighbors.
void scan_feature(const Matrix& x, const std::vector<int>& y,
                  const std::vector<std::size_t>& idx, int feature,
                  SplitChoice& best) {
  std::vector<std::pair<double, int>> values;
  values.reserve(idx.size());
  for (std::size_t i : idx) {
    values.emplace_back(x.at(i, static_cast<std::size_t>(feature)), y[i]);
  }
  std::sort(values.begin(), values.end());

  long total = static_cast<long>(values.size());
  long total_accept = 0;
  for (const auto& [v, label] : values) total_accept += label;

  long left_n = 0;
  long left_accept = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    ++left_n;
    left_accept += values[i].second;
    if (values[i].first == values[i + 1].first) continue;
    long right_n = total - left_n;
    double weighted =
        (static_cast<double>(left_n) * gini_pair(left_accept, left_n) +
         static_cast<double>(right_n) *
             gini_pair(total_accept - left_accept, right_n)) /
        static_cast<double>(total);
    if (weighted + 1e-12 < best.gini) {
      best.gini = weighted;
      best.feature = feature;
      best.threshold = values[i].first / 2.0 + values[i + 1].first / 2.0;
    }
  }
}

class TreeBuilder {
public:
  TreeBuilder(const Matrix& x, const std::vector<int>& y, SplitMix64* rng,
              std::size_t mtry)
      : x_(x), y_(y), rng_(rng), mtry_(mtry) {}

  TreeParams build(std::vector<std::size_t> idx) {
    TreeParams tree;
    grow(std::move(idx), tree);
    return tree;
  }

private:
  int grow(std::vector<std::size_t> idx, TreeParams& tree) {
    int node_id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();

    bool pure = true;
    for (std::size_t i : idx) {
      if (y_[i] != y_[idx[0]]) {
        pure = false;
        break;
      }
    }
    if (pure || idx.size() < 2) {
      tree.nodes[node_id].label = majority_label(y_, idx);
      return node_id;
    }

    SplitChoice best;
    if (rng_ == nullptr) {
      for (std::size_t f = 0; f < x_.cols; ++f) {
        scan_feature(x_, y_, idx, static_cast<int>(f), best);
      }
    } else {
      // Forest mode: a fresh random feature subset per node.
      std::vector<std::size_t> features(x_.cols);
      std::iota(features.begin(), features.end(), 0);
      for (std::size_t i = 0; i < mtry_ && i < features.size(); ++i) {
        std::size_t j = i + static_cast<std::size_t>(
                                rng_->next_below(features.size() - i));
        std::swap(features[i], features[j]);
      }
      features.resize(std::min(mtry_, features.size()));
      std::sort(features.begin(), features.end());
      for (std::size_t f : features) {
        scan_feature(x_, y_, idx, static_cast<int>(f), best);
      }
    }

    if (best.feature < 0) {
      tree.nodes[node_id].label = majority_label(y_, idx);
      return node_id;
    }

    std::vector<std::size_t> left_idx;
    std::vector<std::size_t> right_idx;
    for (std::size_t i : idx) {
      if (x_.at(i, static_cast<std::size_t>(best.feature)) <= best.threshold) {
        left_idx.push_back(i);
      } else {
        right_idx.push_back(i);
      }
    }
    if (left_idx.empty() || right_idx.empty()) {
      tree.nodes[node_id].label = majority_label(y_, idx);
      return node_id;
    }

    tree.nodes[node_id].feature = best.feature;
    tree.nodes[node_id].threshold = best.threshold;
    idx.clear();
    idx.shrink_to_fit();
    int left = grow(std::move(left_idx), tree);
    tree.nodes[node_id].left = left;
    int right = grow(std::move(right_idx), tree);
    tree.nodes[node_id].right = right;
    return node_id;
  }

  const Matrix& x_;
  const std::vector<int>& y_;
  SplitMix64* rng_;
  std::size_t mtry_;
};

int tree_predict(const TreeParams& tree, std::span<const double> row) {
  int node = 0;
  while (tree.nodes[node].feature >= 0) {
    const TreeNode& n = tree.nodes[node];
    node = row[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left
                                                                   : n.right;
  }
  return tree.nodes[node].label;
}

// ---- logistic regression -------------------------------------------------------

double sigmoid(double t) {
  if (t >= 0) {
    double e = std::exp(-t);
    return 1.0 / (1.0 + e);
  }
  double e = std::exp(t);
  return e / (1.0 + e);
}

double softplus(double t) {
  // log(1 + exp(t)) without overflow
  return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
}

constexpr double kLrL2 = 1.0;
constexpr double kLrGradTol = 1e-6;
constexpr int kLrMaxIters = 100000;

LinearParams train_logistic(const Matrix& x, const std::vector<int>& y,
                            std::vector<std::string>& notes) {
  std::size_t n = x.rows;
  std::size_t d = x.cols;
  std::vector<double> w(d, 0.0);
  double b = 0.0;

  auto objective = [&](const std::vector<double>& wv, double bv) {
    double obj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double z = bv;
      auto row = x.row(i);
      for (std::size_t j = 0; j < d; ++j) z += wv[j] * row[j];
      double yi = y[i] == 1 ? 1.0 : -1.0;
      obj += softplus(-yi * z);
    }
    for (double v : wv) obj += 0.5 * kLrL2 * v * v;
    return obj;
  };

  std::vector<double> grad_w(d);
  std::vector<double> trial_w(d);
  double step = 1.0;
  double obj = objective(w, b);
  for (int iter = 0; iter < kLrMaxIters; ++iter) {
    std::fill(grad_w.begin(), grad_w.end(), 0.0);
    double grad_b = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double z = b;
      auto row = x.row(i);
      for (std::size_t j = 0; j < d; ++j) z += w[j] * row[j];
      double yi = y[i] == 1 ? 1.0 : -1.0;
      double coef = -yi * sigmoid(-yi * z);
      for (std::size_t j = 0; j < d; ++j) grad_w[j] += coef * row[j];
      grad_b += coef;
    }
    for (std::size_t j = 0; j < d; ++j) grad_w[j] += kLrL2 * w[j];

    double grad_norm_sq = grad_b * grad_b;
    for (double g : grad_w) grad_norm_sq += g * g;
    if (std::sqrt(grad_norm_sq) <= kLrGradTol) {
      return {std::move(w), b};
    }

    // Armijo backtracking keeps the schedule deterministic and step-size free.
    while (true) {
      for (std::size_t j = 0; j < d; ++j) trial_w[j] = w[j] - step * grad_w[j];
      double trial_b = b - step * grad_b;
      double trial_obj = objective(trial_w, trial_b);
      if (trial_obj <= obj - 0.5 * step * grad_norm_sq) {
        w.swap(trial_w);
        b = trial_b;
        obj = trial_obj;
        step *= 1.25;
        break;
      }
      step *= 0.5;
      if (step < 1e-18) {
        notes.push_back("logistic regression: step underflow before tolerance");
        return {std::move(w), b};
      }
    }
  }
  notes.push_back("logistic regression: gradient tolerance not reached");
  return {std::move(w), b};
}

// ---- linear SVM ----------------------------------------------------------------

constexpr double kSvmC = 1.0;
constexpr int kSvmIterations = 3000;

// Full-batch Pegasos subgradient schedule with ball projection; the bias is
// an extra always-one feature, so it is regularized like the weights.
LinearParams train_linear_svm(const Matrix& x, const std::vector<int>& y) {
  std::size_t n = x.rows;
  std::size_t d = x.cols;
  double lambda = 1.0 / (kSvmC * static_cast<double>(n));
  double radius = 1.0 / std::sqrt(lambda);

  std::vector<double> w(d + 1, 0.0);  // w[d] is the bias weight
  for (int t = 1; t <= kSvmIterations; ++t) {
    std::vector<double> grad(d + 1, 0.0);
    for (std::size_t j = 0; j <= d; ++j) grad[j] = lambda * w[j];
    for (std::size_t i = 0; i < n; ++i) {
      auto row = x.row(i);
      double z = w[d];
      for (std::size_t j = 0; j < d; ++j) z += w[j] * row[j];
      double yi = y[i] == 1 ? 1.0 : -1.0;
      if (yi * z < 1.0) {
        double coef = -yi / static_cast<double>(n);
        for (std::size_t j = 0; j < d; ++j) grad[j] += coef * row[j];
        grad[d] += coef;
      }
    }
    double eta = 1.0 / (lambda * static_cast<double>(t));
    double norm_sq = 0.0;
    for (std::size_t j = 0; j <= d; ++j) {
      w[j] -= eta * grad[j];
      norm_sq += w[j] * w[j];
    }
    double norm = std::sqrt(norm_sq);
    if (norm > radius) {
      double scale = radius / norm;
      for (std::size_t j = 0; j <= d; ++j) w[j] *= scale;
    }
  }

  LinearParams params;
  params.bias = w[d];
  w.pop_back();
  params.weights = std::move(w);
  return params;
}

// ---- gaussian naive bayes -------------------------------------------------------

constexpr double kNbVarSmoothing = 1e-9;

GaussianNbParams train_naive_bayes(const Matrix& x, const std::vector<int>& y) {
  std::size_t n = x.rows;
  std::size_t d = x.cols;
  GaussianNbParams params;

  std::array<long, 2> counts = {0, 0};
  for (int label : y) ++counts[static_cast<std::size_t>(label)];

  // Smoothing scales with the largest overall feature variance.
  double max_var = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x.at(i, j);
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double delta = x.at(i, j) - mean;
      var += delta * delta;
    }
    var /= static_cast<double>(n);
    max_var = std::max(max_var, var);
  }
  double epsilon = kNbVarSmoothing * std::max(max_var, 1.0);

  for (int c = 0; c < 2; ++c) {
    auto uc = static_cast<std::size_t>(c);
    if (counts[uc] == 0) continue;
    params.class_present[uc] = true;
    params.log_prior[uc] = std::log(static_cast<double>(counts[uc]) /
                                    static_cast<double>(n));
    params.mean[uc].assign(d, 0.0);
    params.variance[uc].assign(d, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] != c) continue;
      for (std::size_t j = 0; j < d; ++j) params.mean[uc][j] += x.at(i, j);
    }
    for (std::size_t j = 0; j < d; ++j) {
      params.mean[uc][j] /= static_cast<double>(counts[uc]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (y[i] != c) continue;
      for (std::size_t j = 0; j < d; ++j) {
        double delta = x.at(i, j) - params.mean[uc][j];
        params.variance[uc][j] += delta * delta;
      }
    }
    for (std::size_t j = 0; j < d; ++j) {
      params.variance[uc][j] =
          params.variance[uc][j] / static_cast<double>(counts[uc]) + epsilon;
    }
  }
  return params;
}

double nb_log_likelihood(const GaussianNbParams& params, int c,
                         std::span<const double> row) {
  auto uc = static_cast<std::size_t>(c);
  if (!params.class_present[uc]) {
    return -std::numeric_limits<double>::infinity();
  }
  double ll = params.log_prior[uc];
  for (std::size_t j = 0; j < row.size(); ++j) {
    double var = params.variance[uc][j];
    double delta = row[j] - params.mean[uc][j];
    ll += -0.5 * std::log(2.0 * M_PI * var) - delta * delta / (2.0 * var);
  }
  return ll;
}

}  // namespace

// ---- train ---------------------------------------------------------------------

Model train(const ModelSpec& spec, const LabeledDataset& data) {
  if (data.size() == 0) throw ArgumentError("train: empty dataset");
  if (data.features.cols == 0) throw ArgumentError("train: zero-dimension data");
  if (data.features.rows != data.labels.size()) {
    throw ArgumentError("train: row/label count mismatch");
  }

  Model model;
  model.spec = spec;
  model.dim = data.features.cols;

  switch (spec.kind) {
    case ModelKind::Knn: {
      if (spec.k < 1) throw ArgumentError("train: KNN k < 1");
      KnnParams params;
      params.k = spec.k;
      if (static_cast<std::size_t>(spec.k) > data.size()) {
        params.k = static_cast<int>(data.size());
        model.notes.push_back("k clamped from " + std::to_string(spec.k) +
                              " to " + std::to_string(params.k));
      }
      params.train_features = data.features;
      params.train_labels = data.labels;
      model.params = std::move(params);
      break;
    }
    case ModelKind::DecisionTree: {
      std::vector<std::size_t> idx(data.size());
      std::iota(idx.begin(), idx.end(), 0);
      TreeBuilder builder(data.features, data.labels, nullptr, 0);
      model.params = builder.build(std::move(idx));
      break;
    }
    case ModelKind::RandomForest: {
      if (spec.trees < 1) throw ArgumentError("train: forest needs >= 1 tree");
      ForestParams forest;
      forest.trees.reserve(static_cast<std::size_t>(spec.trees));
      auto mtry = static_cast<std::size_t>(std::max(
          1.0, std::floor(std::sqrt(static_cast<double>(data.features.cols)))));
      for (int t = 0; t < spec.trees; ++t) {
        SplitMix64 tree_rng(spec.seed ^
                            (0xa076bc9545f1f9ULL + 0x9e3779b97f4a7c15ULL *
                                                       static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> sample(data.size());
        for (auto& s : sample) {
          s = static_cast<std::size_t>(tree_rng.next_below(data.size()));
        }
        TreeBuilder builder(data.features, data.labels, &tree_rng, mtry);
        forest.trees.push_back(builder.build(std::move(sample)));
      }
      model.params = std::move(forest);
      break;
    }
    case ModelKind::LogisticRegression: {
      if (single_class(data.labels)) {
        throw DegenerateTrainingError(
            "logistic regression needs both classes in the training data");
      }
      model.params = train_logistic(data.features, data.labels, model.notes);
      break;
    }
    case ModelKind::NaiveBayes: {
      model.params = train_naive_bayes(data.features, data.labels);
      break;
    }
    case ModelKind::LinearSvm: {
      if (single_class(data.labels)) {
        throw DegenerateTrainingError(
            "linear SVM needs both classes in the training data");
      }
      model.params = train_linear_svm(data.features, data.labels);
      break;
    }
  }
  return model;
}

// ---- predict -------------------------------------------------------------------

namespace {

int knn_predict_row(const KnnParams& params, std::span<const double> row) {
  std::size_t n = params.train_features.rows;
  std::vector<std::pair<double, std::size_t>> dists;
  dists.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto train_row = params.train_features.row(i);
    double d2 = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      double delta = row[j] - train_row[j];
      d2 += delta * delta;
    }
    dists.emplace_back(d2, i);
  }
  auto k = static_cast<std::size_t>(params.k);
  // (distance, index) pairs: equal distances resolve to the smaller index
  std::partial_sort(dists.begin(), dists.begin() + static_cast<long>(k),
                    dists.end());
  long accept = 0;
  for (std::size_t i = 0; i < k; ++i) {
    accept += params.train_labels[dists[i].second];
  }
  long reject = static_cast<long>(k) - accept;
  return accept > reject ? 1 : 0;
}

}  // namespace

std::vector<int> predict(const Model& model, const Matrix& features) {
  if (features.cols != model.dim) {
    throw ArgumentError("predict: feature dimension " +
                        std::to_string(features.cols) + " != model dimension " +
                        std::to_string(model.dim));
  }
  std::vector<int> out(features.rows, 0);
  for (std::size_t r = 0; r < features.rows; ++r) {
    auto row = features.row(r);
    if (const auto* knn = std::get_if<KnnParams>(&model.params)) {
      out[r] = knn_predict_row(*knn, row);
    } else if (const auto* tree = std::get_if<TreeParams>(&model.params)) {
      out[r] = tree_predict(*tree, row);
    } else if (const auto* forest = std::get_if<ForestParams>(&model.params)) {
      long accept = 0;
      for (const auto& t : forest->trees) accept += tree_predict(t, row);
      long reject = static_cast<long>(forest->trees.size()) - accept;
      out[r] = accept > reject ? 1 : 0;
    } else if (const auto* linear = std::get_if<LinearParams>(&model.params)) {
      double z = linear->bias;
      for (std::size_t j = 0; j < row.size(); ++j) {
        z += linear->weights[j] * row[j];
      }
      out[r] = z > 0.0 ? 1 : 0;
    } else if (const auto* nb = std::get_if<GaussianNbParams>(&model.params)) {
      double ll_accept = nb_log_likelihood(*nb, 1, row);
      double ll_reject = nb_log_likelihood(*nb, 0, row);
      out[r] = ll_accept > ll_reject ? 1 : 0;
    }
  }
  return out;
}

// ---- evaluate ------------------------------------------------------------------

EvalResult eval_from_confusion(long tp, long fp, long fn, long tn) {
  EvalResult r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.tn = tn;
  long total = tp + fp + fn + tn;
  r.accuracy =
      total == 0 ? 0.0 : static_cast<double>(tp + tn) / static_cast<double>(total);
  double precision =
      tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  double recall =
      tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  r.f1 = precision + recall == 0.0
             ? 0.0
             : 2.0 * precision * recall / (precision + recall);
  return r;
}

EvalResult evaluate(const Model& model, const LabeledDataset& test) {
  if (test.size() == 0) throw ArgumentError("evaluate: empty test set");
  std::vector<int> predicted = predict(model, test.features);
  long tp = 0, fp = 0, fn = 0, tn = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == 1 && test.labels[i] == 1) ++tp;
    else if (predicted[i] == 1 && test.labels[i] == 0) ++fp;
    else if (predicted[i] == 0 && test.labels[i] == 1) ++fn;
    else ++tn;
  }
  return eval_from_confusion(tp, fp, fn, tn);
}

std::string eval_to_json(const EvalResult& r) {
  json j;
  j["accuracy"] = r.accuracy;
  j["f1"] = r.f1;
  j["confusion"] = {{"tp", r.tp}, {"fp", r.fp}, {"fn", r.fn}, {"tn", r.tn}};
  return j.dump();
}

std::string eval_csv_row(const EvalResult& r) {
  return csv_row({format_double(r.accuracy), format_double(r.f1),
                  std::to_string(r.tp), std::to_string(r.fp),
                  std::to_string(r.fn), std::to_string(r.tn)});
}

// ---- serialization -------------------------------------------------------------

namespace {

json tree_to_json(const TreeParams& tree) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    nodes.push_back({{"f", n.feature},
                     {"t", n.threshold},
                     {"lbl", n.label},
                     {"l", n.left},
                     {"r", n.right}});
  }
  return nodes;
}

TreeParams tree_from_json(const json& nodes) {
  TreeParams tree;
  for (const auto& n : nodes) {
    tree.nodes.push_back({n.at("f").get<int>(), n.at("t").get<double>(),
                          n.at("lbl").get<int>(), n.at("l").get<int>(),
                          n.at("r").get<int>()});
  }
  return tree;
}

}  // namespace

std::string model_to_json(const Model& model) {
  json j;
  j["format_version"] = 1;
  j["kind"] = to_string(model.spec.kind);
  j["k"] = model.spec.k;
  j["trees"] = model.spec.trees;
  j["seed"] = model.spec.seed;
  j["dim"] = model.dim;
  j["notes"] = model.notes;

  json params;
  if (const auto* knn = std::get_if<KnnParams>(&model.params)) {
    params["k"] = knn->k;
    params["rows"] = knn->train_features.rows;
    params["features"] = knn->train_features.data;
    params["labels"] = knn->train_labels;
  } else if (const auto* tree = std::get_if<TreeParams>(&model.params)) {
    params["nodes"] = tree_to_json(*tree);
  } else if (const auto* forest = std::get_if<ForestParams>(&model.params)) {
    json trees = json::array();
    for (const auto& t : forest->trees) trees.push_back(tree_to_json(t));
    params["trees"] = std::move(trees);
  } else if (const auto* linear = std::get_if<LinearParams>(&model.params)) {
    params["weights"] = linear->weights;
    params["bias"] = linear->bias;
  } else if (const auto* nb = std::get_if<GaussianNbParams>(&model.params)) {
    params["log_prior"] = nb->log_prior;
    params["class_present"] = nb->class_present;
    params["mean"] = {nb->mean[0], nb->mean[1]};
    params["variance"] = {nb->variance[0], nb->variance[1]};
  }
  j["params"] = std::move(params);
  return j.dump();
}

Model model_from_json(std::string_view text) {
  json j = json::parse(text);
  if (j.at("format_version").get<int>() != 1) {
    throw ParseError("unsupported model format version", 0);
  }
  Model model;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "knn") model.spec.kind = ModelKind::Knn;
  else if (kind == "decision_tree") model.spec.kind = ModelKind::DecisionTree;
  else if (kind == "random_forest") model.spec.kind = ModelKind::RandomForest;
  else if (kind == "logistic_regression") model.spec.kind = ModelKind::LogisticRegression;
  else if (kind == "naive_bayes") model.spec.kind = ModelKind::NaiveBayes;
  else if (kind == "linear_svm") model.spec.kind = ModelKind::LinearSvm;
  else throw ParseError("unknown model kind: " + kind, 0);

  model.spec.k = j.at("k").get<int>();
  model.spec.trees = j.at("trees").get<int>();
  model.spec.seed = j.at("seed").get<std::uint64_t>();
  model.dim = j.at("dim").get<std::size_t>();
  model.notes = j.at("notes").get<std::vector<std::string>>();

  const json& params = j.at("params");
  switch (model.spec.kind) {
    case ModelKind::Knn: {
      KnnParams knn;
      knn.k = params.at("k").get<int>();
      knn.train_features.rows = params.at("rows").get<std::size_t>();
      knn.train_features.data = params.at("features").get<std::vector<double>>();
      knn.train_features.cols = model.dim;
      knn.train_labels = params.at("labels").get<std::vector<int>>();
      model.params = std::move(knn);
      break;
    }
    case ModelKind::DecisionTree:
      model.params = tree_from_json(params.at("nodes"));
      break;
    case ModelKind::RandomForest: {
      ForestParams forest;
      for (const auto& t : params.at("trees")) {
        forest.trees.push_back(tree_from_json(t));
      }
      model.params = std::move(forest);
      break;
    }
    case ModelKind::LogisticRegression:
    case ModelKind::LinearSvm: {
      LinearParams linear;
      linear.weights = params.at("weights").get<std::vector<double>>();
      linear.bias = params.at("bias").get<double>();
      model.params = std::move(linear);
      break;
    }
    case ModelKind::NaiveBayes: {
      GaussianNbParams nb;
      nb.log_prior = params.at("log_prior").get<std::array<double, 2>>();
      nb.class_present = params.at("class_present").get<std::array<bool, 2>>();
      nb.mean[0] = params.at("mean")[0].get<std::vector<double>>();
      nb.mean[1] = params.at("mean")[1].get<std::vector<double>>();
      nb.variance[0] = params.at("variance")[0].get<std::vector<double>>();
      nb.variance[1] = params.at("variance")[1].get<std::vector<double>>();
      model.params = std::move(nb);
      break;
    }
  }
  return model;
}

}  // namespace revagg
