#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ytcc/corpus.hpp"
#include "ytcc/features.hpp"
#include "ytcc/types.hpp"

namespace ytcc {

enum class EstimatorKind {
    LinearSvc,
    LogisticRegression,
    MultinomialNb,
    RandomForest,
    DecisionTree,
};

const std::string& to_string(EstimatorKind kind);
std::optional<EstimatorKind> parse_estimator_kind(const std::string& text);

using HParamValue = std::variant<bool, std::int64_t, double, std::string>;

std::string to_display_string(const HParamValue& value);

/// Typed hyperparameter map. Numeric getters accept either integer or
/// floating JSON/CLI values.
struct Hyperparameters {
    std::map<std::string, HParamValue> values;

    bool has(const std::string& name) const { return values.count(name) != 0; }
    void set(const std::string& name, HParamValue value) { values[name] = std::move(value); }

    double get_double(const std::string& name, double fallback) const;
    std::int64_t get_int(const std::string& name, std::int64_t fallback) const;
    bool get_bool(const std::string& name, bool fallback) const;
    std::string get_string(const std::string& name, const std::string& fallback) const;
};

struct EstimatorSpec {
    EstimatorKind kind = EstimatorKind::LogisticRegression;
    Hyperparameters hparams;
    std::uint64_t seed = 0;
};

/// Validates names and values for the kind. Throws SchemaError for
/// unknown/invalid entries and UnsupportedSpecError for combinations the
/// optimizers do not implement (logistic penalty l1/elasticnet).
/// Resolves aliases in place ("auto"/"none" -> "all" for tree
/// max_features).
void validate_spec(EstimatorSpec& spec);

/// Tuned defaults per kind and feature scheme.
EstimatorSpec default_spec(EstimatorKind kind, Scheme scheme);

/// Canonical JSON dump of a spec (stable across runs; used as cache key).
std::string spec_to_string(const EstimatorSpec& spec);

// ------------------------------------------------------- fitted params

struct NaiveBayesParams {
    DenseVector log_prior;       // per class
    DenseMatrix log_likelihood;  // classes x features
};

/// One-vs-rest linear model (logistic regression or linear SVC).
struct LinearParams {
    DenseMatrix weights;    // classes x features
    DenseVector intercept;  // per class
};

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    Real threshold = 0.0;
    int left = -1;
    int right = -1;
    std::vector<double> counts;  // leaf: per-class sample counts
    int majority = -1;           // leaf: argmax of counts, lowest index on ties
};

struct TreeParams {
    std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct ForestParams {
    std::vector<TreeParams> trees;
};

struct TrainedModel {
    EstimatorSpec spec;
    std::vector<CommentClass> classes;  // classes present in training, canonical order
    std::string vectorizer_fingerprint;
    Index n_features = 0;
    bool converged = true;
    std::variant<NaiveBayesParams, LinearParams, TreeParams, ForestParams> params;
};

// ----------------------------------------------------------------- ops

TrainedModel train(const EstimatorSpec& spec, const FeatureMatrix& X,
                   const std::vector<CommentClass>& y);

std::vector<CommentClass> predict(const TrainedModel& model, const FeatureMatrix& X);

/// Per-class decision scores whose row-wise argmax (lowest class index on
/// ties) equals predict: NB log-joint, linear decision values, tree leaf
/// fractions, forest vote fractions.
DenseMatrix predict_scores(const TrainedModel& model, const FeatureMatrix& X);

void save_model(const TrainedModel& model, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace ytcc
