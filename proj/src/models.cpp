#include "ytcc/models.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

#include "ytcc/errors.hpp"
#include "ytcc/linear.hpp"
#include "ytcc/parallel.hpp"
#include "ytcc/tree.hpp"

namespace ytcc {

namespace {

const std::array<std::string, 5> kKindNames = {
    "linear_svc", "logistic_regression", "multinomial_nb", "random_forest", "decision_tree",
};

}  // namespace

const std::string& to_string(EstimatorKind kind) {
    return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<EstimatorKind> parse_estimator_kind(const std::string& text) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (text == kKindNames[i]) return static_cast<EstimatorKind>(i);
    }
    return std::nullopt;
}

std::string to_display_string(const HParamValue& value) {
    if (const bool* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
    if (const std::int64_t* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
    if (const double* d = std::get_if<double>(&value)) {
        std::string s = std::to_string(*d);
        while (s.size() > 1 && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    }
    return std::get<std::string>(value);
}

double Hyperparameters::get_double(const std::string& name, double fallback) const {
    const auto it = values.find(name);
    if (it == values.end()) return fallback;
    if (const double* d = std::get_if<double>(&it->second)) return *d;
    if (const std::int64_t* i = std::get_if<std::int64_t>(&it->second)) return static_cast<double>(*i);
    throw SchemaError("hyperparameter \"" + name + "\" must be numeric");
}

std::int64_t Hyperparameters::get_int(const std::string& name, std::int64_t fallback) const {
    const auto it = values.find(name);
    if (it == values.end()) return fallback;
    if (const std::int64_t* i = std::get_if<std::int64_t>(&it->second)) return *i;
    if (const double* d = std::get_if<double>(&it->second)) {
        if (*d == std::floor(*d)) return static_cast<std::int64_t>(*d);
    }
    throw SchemaError("hyperparameter \"" + name + "\" must be an integer");
}

bool Hyperparameters::get_bool(const std::string& name, bool fallback) const {
    const auto it = values.find(name);
    if (it == values.end()) return fallback;
    if (const bool* b = std::get_if<bool>(&it->second)) return *b;
    throw SchemaError("hyperparameter \"" + name + "\" must be a boolean");
}

std::string Hyperparameters::get_string(const std::string& name, const std::string& fallback) const {
    const auto it = values.find(name);
    if (it == values.end()) return fallback;
    if (const std::string* s = std::get_if<std::string>(&it->second)) return *s;
    throw SchemaError("hyperparameter \"" + name + "\" must be a string");
}

namespace {

void require_names(const EstimatorSpec& spec, const std::set<std::string>& allowed) {
    for (const auto& [name, value] : spec.hparams.values) {
        if (!allowed.count(name)) {
            throw SchemaError("hyperparameter \"" + name + "\" is not valid for " +
                              to_string(spec.kind));
        }
    }
}

}  // namespace

void validate_spec(EstimatorSpec& spec) {
    switch (spec.kind) {
        case EstimatorKind::LinearSvc: {
            require_names(spec, {"C"});
            if (spec.hparams.get_double("C", 1.0) <= 0) throw SchemaError("C must be positive");
            break;
        }
        case EstimatorKind::LogisticRegression: {
            require_names(spec, {"C", "penalty", "max_iter", "tol"});
            if (spec.hparams.get_double("C", 1.0) <= 0) throw SchemaError("C must be positive");
            const std::string penalty = spec.hparams.get_string("penalty", "l2");
            if (penalty == "l1" || penalty == "elasticnet") {
                throw UnsupportedSpecError("penalty \"" + penalty +
                                           "\" is not supported by this optimizer");
            }
            if (penalty != "l2" && penalty != "none") {
                throw SchemaError("penalty must be one of l2, none");
            }
            if (spec.hparams.get_int("max_iter", 200) < 1) throw SchemaError("max_iter must be >= 1");
            if (spec.hparams.get_double("tol", 1e-4) <= 0) throw SchemaError("tol must be positive");
            break;
        }
        case EstimatorKind::MultinomialNb: {
            require_names(spec, {"alpha", "fit_prior"});
            if (spec.hparams.get_double("alpha", 1.0) < 0) throw SchemaError("alpha must be >= 0");
            spec.hparams.get_bool("fit_prior", true);
            break;
        }
        case EstimatorKind::RandomForest: {
            require_names(spec, {"n_estimators", "max_features", "criterion"});
            if (spec.hparams.get_int("n_estimators", 100) < 1) {
                throw SchemaError("n_estimators must be >= 1");
            }
            const std::string mf = spec.hparams.get_string("max_features", "sqrt");
            if (mf != "sqrt" && mf != "log2") throw SchemaError("max_features must be sqrt or log2");
            const std::string crit = spec.hparams.get_string("criterion", "gini");
            if (crit != "gini" && crit != "entropy") throw SchemaError("criterion must be gini or entropy");
            break;
        }
        case EstimatorKind::DecisionTree: {
            require_names(spec, {"criterion", "max_features"});
            std::string mf = spec.hparams.get_string("max_features", "all");
            // Conventional aliases for "use every feature".
            if (mf == "auto" || mf == "none" || mf == "None") {
                mf = "all";
                spec.hparams.set("max_features", mf);
            }
            if (mf != "sqrt" && mf != "log2" && mf != "all") {
                throw SchemaError("max_features must be sqrt, log2 or all");
            }
            const std::string crit = spec.hparams.get_string("criterion", "gini");
            if (crit != "gini" && crit != "entropy") throw SchemaError("criterion must be gini or entropy");
            break;
        }
    }
}

EstimatorSpec default_spec(EstimatorKind kind, Scheme scheme) {
    EstimatorSpec spec;
    spec.kind = kind;
    switch (kind) {
        case EstimatorKind::LinearSvc:
            spec.hparams.set("C", 1.0);
            break;
        case EstimatorKind::LogisticRegression:
            spec.hparams.set("C", scheme == Scheme::Tfidf ? 10.0 : 1.0);
            spec.hparams.set("penalty", std::string("l2"));
            break;
        case EstimatorKind::MultinomialNb:
            spec.hparams.set("alpha", 1.0);
            spec.hparams.set("fit_prior", scheme != Scheme::Tfidf);
            break;
        case EstimatorKind::RandomForest:
            spec.hparams.set("n_estimators", std::int64_t{1000});
            spec.hparams.set("max_features", std::string("log2"));
            spec.hparams.set("criterion", std::string("entropy"));
            break;
        case EstimatorKind::DecisionTree:
            spec.hparams.set("criterion", std::string(scheme == Scheme::Tfidf ? "entropy" : "gini"));
            spec.hparams.set("max_features", std::string("all"));
            break;
    }
    return spec;
}

namespace {

nlohmann::json hparams_to_json(const Hyperparameters& hparams) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : hparams.values) {
        std::visit([&](const auto& v) { j[name] = v; }, value);
    }
    return j;
}

Hyperparameters hparams_from_json(const nlohmann::json& j) {
    Hyperparameters out;
    for (const auto& [name, value] : j.items()) {
        if (value.is_boolean()) out.set(name, value.get<bool>());
        else if (value.is_number_integer()) out.set(name, value.get<std::int64_t>());
        else if (value.is_number_float()) out.set(name, value.get<double>());
        else if (value.is_string()) out.set(name, value.get<std::string>());
        else throw ParseError("unsupported hyperparameter type for \"" + name + "\"");
    }
    return out;
}

nlohmann::json spec_to_json(const EstimatorSpec& spec) {
    return nlohmann::json{{"kind", to_string(spec.kind)},
                          {"hyperparameters", hparams_to_json(spec.hparams)},
                          {"seed", spec.seed}};
}

}  // namespace

std::string spec_to_string(const EstimatorSpec& spec) {
    return spec_to_json(spec).dump();
}

// ------------------------------------------------------------- training

namespace {

std::vector<CommentClass> present_classes(const std::vector<CommentClass>& y) {
    std::array<bool, kNumClasses> seen{};
    for (CommentClass c : y) seen[static_cast<std::size_t>(c)] = true;
    std::vector<CommentClass> classes;
    for (int k = 0; k < kNumClasses; ++k) {
        if (seen[static_cast<std::size_t>(k)]) classes.push_back(static_cast<CommentClass>(k));
    }
    return classes;
}

std::vector<int> class_indices(const std::vector<CommentClass>& y,
                               const std::vector<CommentClass>& classes) {
    std::array<int, kNumClasses> position;
    position.fill(-1);
    for (std::size_t k = 0; k < classes.size(); ++k) {
        position[static_cast<std::size_t>(classes[k])] = static_cast<int>(k);
    }
    std::vector<int> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = position[static_cast<std::size_t>(y[i])];
    return out;
}

NaiveBayesParams fit_naive_bayes(const EstimatorSpec& spec, const SparseMatrix& X,
                                 const std::vector<int>& y, int n_classes) {
    // alpha=0 appears in the tuning grid; clamp so log() stays finite.
    const double alpha = std::max(spec.hparams.get_double("alpha", 1.0), 1e-10);
    const bool fit_prior = spec.hparams.get_bool("fit_prior", true);
    const Index n_features = X.cols();

    DenseMatrix feature_count = DenseMatrix::Zero(n_classes, n_features);
    DenseVector class_docs = DenseVector::Zero(n_classes);
    for (std::size_t i = 0; i < y.size(); ++i) class_docs[y[i]] += 1.0;
    for (Index j = 0; j < X.outerSize(); ++j) {
        for (SparseMatrix::InnerIterator it(X, j); it; ++it) {
            if (it.value() < 0) throw SchemaError("multinomial_nb requires non-negative features");
            feature_count(y[static_cast<std::size_t>(it.row())], it.col()) += it.value();
        }
    }

    NaiveBayesParams params;
    params.log_prior.resize(n_classes);
    params.log_likelihood.resize(n_classes, n_features);
    const double n_docs = static_cast<double>(y.size());
    for (int k = 0; k < n_classes; ++k) {
        params.log_prior[k] = fit_prior ? std::log(class_docs[k] / n_docs)
                                        : -std::log(static_cast<double>(n_classes));
        const double class_total = feature_count.row(k).sum();
        const double denom = std::log(class_total + alpha * static_cast<double>(n_features));
        for (Index j = 0; j < n_features; ++j) {
            params.log_likelihood(k, j) = std::log(feature_count(k, j) + alpha) - denom;
        }
    }
    return params;
}

LinearParams fit_linear(const EstimatorSpec& spec, const SparseMatrix& X, const std::vector<int>& y,
                        int n_classes, bool& converged) {
    const Index n_features = X.cols();
    LinearParams params;
    params.weights.resize(n_classes, n_features);
    params.intercept.resize(n_classes);
    converged = true;

    const double C = spec.hparams.get_double("C", 1.0);
    for (int k = 0; k < n_classes; ++k) {
        DenseVector binary(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) binary[static_cast<Index>(i)] = y[i] == k ? 1.0 : -1.0;
        linear::BinaryFit fit;
        if (spec.kind == EstimatorKind::LogisticRegression) {
            const bool penalize = spec.hparams.get_string("penalty", "l2") == "l2";
            fit = linear::fit_logistic_binary(X, binary, C, penalize,
                                              spec.hparams.get_double("tol", 1e-4),
                                              static_cast<int>(spec.hparams.get_int("max_iter", 200)));
        } else {
            fit = linear::fit_svc_binary(X, binary, C, 1e-4, 1000,
                                         derive_seed(spec.seed, static_cast<std::uint64_t>(k)));
        }
        params.weights.row(k) = fit.weights.transpose();
        params.intercept[k] = fit.intercept;
        converged = converged && fit.trace.converged;
    }
    return params;
}

TreeParams fit_decision_tree(const EstimatorSpec& spec, const SparseMatrix& X,
                             const std::vector<int>& y, int n_classes) {
    const DenseMatrix dense = DenseMatrix(X);
    const auto criterion = spec.hparams.get_string("criterion", "gini") == "entropy"
                               ? tree::Criterion::Entropy
                               : tree::Criterion::Gini;
    const int max_features =
        tree::resolve_max_features(spec.hparams.get_string("max_features", "all"), X.cols());
    std::vector<int> samples(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) samples[i] = static_cast<int>(i);
    Rng rng(spec.seed);
    return tree::build_tree(dense, y, std::move(samples), n_classes, criterion, max_features, rng);
}

ForestParams fit_random_forest(const EstimatorSpec& spec, const SparseMatrix& X,
                               const std::vector<int>& y, int n_classes) {
    const DenseMatrix dense = DenseMatrix(X);
    const auto criterion = spec.hparams.get_string("criterion", "gini") == "entropy"
                               ? tree::Criterion::Entropy
                               : tree::Criterion::Gini;
    const int max_features =
        tree::resolve_max_features(spec.hparams.get_string("max_features", "sqrt"), X.cols());
    const std::size_t n_trees = static_cast<std::size_t>(spec.hparams.get_int("n_estimators", 100));

    ForestParams params;
    params.trees.resize(n_trees);
    const int n = static_cast<int>(y.size());
    // Per-tree RNG streams derive from (seed, tree index), so parallel
    // and serial training build identical forests.
    parallel_for(n_trees, [&](std::size_t t) {
        Rng rng = tree::forest_tree_rng(spec.seed, t);
        std::vector<int> sample = tree::bootstrap_sample(rng, n);
        params.trees[t] = tree::build_tree(dense, y, std::move(sample), n_classes, criterion,
                                           max_features, rng);
    });
    return params;
}

}  // namespace

TrainedModel train(const EstimatorSpec& spec, const FeatureMatrix& X,
                   const std::vector<CommentClass>& y) {
    if (static_cast<Index>(y.size()) != X.rows()) {
        throw SchemaError("label count " + std::to_string(y.size()) + " does not match rows " +
                          std::to_string(X.rows()));
    }
    TrainedModel model;
    model.spec = spec;
    validate_spec(model.spec);
    model.classes = present_classes(y);
    if (model.classes.size() < 2) throw SchemaError("training requires at least 2 distinct classes");
    model.n_features = X.cols();
    const std::vector<int> yi = class_indices(y, model.classes);
    const int n_classes = static_cast<int>(model.classes.size());

    switch (model.spec.kind) {
        case EstimatorKind::MultinomialNb:
            model.params = fit_naive_bayes(model.spec, X.values, yi, n_classes);
            break;
        case EstimatorKind::LogisticRegression:
        case EstimatorKind::LinearSvc:
            model.params = fit_linear(model.spec, X.values, yi, n_classes, model.converged);
            break;
        case EstimatorKind::DecisionTree:
            model.params = fit_decision_tree(model.spec, X.values, yi, n_classes);
            break;
        case EstimatorKind::RandomForest:
            model.params = fit_random_forest(model.spec, X.values, yi, n_classes);
            break;
    }
    return model;
}

// ------------------------------------------------------------ inference

DenseMatrix predict_scores(const TrainedModel& model, const FeatureMatrix& X) {
    if (X.cols() != model.n_features) {
        throw SchemaError("feature count " + std::to_string(X.cols()) +
                          " does not match the fingerprinted vocabulary size " +
                          std::to_string(model.n_features));
    }
    const int n_classes = static_cast<int>(model.classes.size());
    const Index rows = X.rows();

    if (const auto* nb = std::get_if<NaiveBayesParams>(&model.params)) {
        DenseMatrix scores = X.values * nb->log_likelihood.transpose();
        scores.rowwise() += nb->log_prior.transpose();
        return scores;
    }
    if (const auto* linear = std::get_if<LinearParams>(&model.params)) {
        DenseMatrix scores = X.values * linear->weights.transpose();
        scores.rowwise() += linear->intercept.transpose();
        return scores;
    }
    const DenseMatrix dense = DenseMatrix(X.values);
    DenseMatrix scores = DenseMatrix::Zero(rows, n_classes);
    if (const auto* tp = std::get_if<TreeParams>(&model.params)) {
        for (Index r = 0; r < rows; ++r) {
            const TreeNode& leaf = tree::tree_leaf_for_row(*tp, dense, r);
            const double total =
                std::accumulate(leaf.counts.begin(), leaf.counts.end(), 0.0);
            for (int k = 0; k < n_classes; ++k) {
                scores(r, k) = leaf.counts[static_cast<std::size_t>(k)] / total;
            }
        }
        return scores;
    }
    const auto& forest = std::get<ForestParams>(model.params);
    for (Index r = 0; r < rows; ++r) {
        for (const TreeParams& t : forest.trees) {
            scores(r, tree::tree_predict_row(t, dense, r)) += 1.0;
        }
    }
    scores /= static_cast<double>(forest.trees.size());
    return scores;
}

std::vector<CommentClass> predict(const TrainedModel& model, const FeatureMatrix& X) {
    const DenseMatrix scores = predict_scores(model, X);
    std::vector<CommentClass> out;
    out.reserve(static_cast<std::size_t>(scores.rows()));
    for (Index r = 0; r < scores.rows(); ++r) {
        int best = 0;
        for (int k = 1; k < scores.cols(); ++k) {
            if (scores(r, k) > scores(r, best)) best = k;  // ties keep the lowest class index
        }
        out.push_back(model.classes[static_cast<std::size_t>(best)]);
    }
    return out;
}

// ---------------------------------------------------------- persistence

namespace {

constexpr int kModelFormatVersion = 1;

nlohmann::json matrix_to_json(const DenseMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

DenseMatrix matrix_from_json(const nlohmann::json& j) {
    const auto data = j.get<std::vector<std::vector<double>>>();
    const Index rows = static_cast<Index>(data.size());
    const Index cols = rows > 0 ? static_cast<Index>(data[0].size()) : 0;
    DenseMatrix m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        if (static_cast<Index>(data[static_cast<std::size_t>(r)].size()) != cols) {
            throw ParseError("ragged matrix in model file");
        }
        for (Index c = 0; c < cols; ++c) m(r, c) = data[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

nlohmann::json vector_to_json(const DenseVector& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

DenseVector vector_from_json(const nlohmann::json& j) {
    const auto data = j.get<std::vector<double>>();
    return Eigen::Map<const DenseVector>(data.data(), static_cast<Index>(data.size()));
}

nlohmann::json tree_to_json(const TreeParams& tree) {
    // Columnar layout keeps large forests compact.
    nlohmann::json features = nlohmann::json::array();
    nlohmann::json thresholds = nlohmann::json::array();
    nlohmann::json lefts = nlohmann::json::array();
    nlohmann::json rights = nlohmann::json::array();
    nlohmann::json counts = nlohmann::json::array();
    for (const TreeNode& node : tree.nodes) {
        features.push_back(node.feature);
        thresholds.push_back(node.threshold);
        lefts.push_back(node.left);
        rights.push_back(node.right);
        counts.push_back(node.counts);
    }
    return nlohmann::json{{"feature", std::move(features)},
                          {"threshold", std::move(thresholds)},
                          {"left", std::move(lefts)},
                          {"right", std::move(rights)},
                          {"counts", std::move(counts)}};
}

TreeParams tree_from_json(const nlohmann::json& j) {
    TreeParams tree;
    const auto features = j.at("feature").get<std::vector<int>>();
    const auto thresholds = j.at("threshold").get<std::vector<double>>();
    const auto lefts = j.at("left").get<std::vector<int>>();
    const auto rights = j.at("right").get<std::vector<int>>();
    const auto counts = j.at("counts").get<std::vector<std::vector<double>>>();
    if (thresholds.size() != features.size() || lefts.size() != features.size() ||
        rights.size() != features.size() || counts.size() != features.size()) {
        throw ParseError("inconsistent tree arrays in model file");
    }
    tree.nodes.resize(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        TreeNode& node = tree.nodes[i];
        node.feature = features[i];
        node.threshold = thresholds[i];
        node.left = lefts[i];
        node.right = rights[i];
        node.counts = counts[i];
        if (node.feature < 0 && !node.counts.empty()) {
            node.majority = 0;
            for (int k = 1; k < static_cast<int>(node.counts.size()); ++k) {
                if (node.counts[static_cast<std::size_t>(k)] >
                    node.counts[static_cast<std::size_t>(node.majority)]) {
                    node.majority = k;
                }
            }
        }
    }
    return tree;
}

}  // namespace

void save_model(const TrainedModel& model, const std::string& path) {
    nlohmann::json j;
    j["format_version"] = kModelFormatVersion;
    j["type"] = "ytcc.model";
    j["kind"] = to_string(model.spec.kind);
    j["hyperparameters"] = hparams_to_json(model.spec.hparams);
    j["seed"] = model.spec.seed;
    std::vector<std::string> classes;
    for (CommentClass c : model.classes) classes.push_back(to_string(c));
    j["classes"] = classes;
    j["vectorizer_fingerprint"] = model.vectorizer_fingerprint;
    j["n_features"] = model.n_features;
    j["converged"] = model.converged;

    nlohmann::json params;
    if (const auto* nb = std::get_if<NaiveBayesParams>(&model.params)) {
        params["log_prior"] = vector_to_json(nb->log_prior);
        params["log_likelihood"] = matrix_to_json(nb->log_likelihood);
    } else if (const auto* linear = std::get_if<LinearParams>(&model.params)) {
        params["weights"] = matrix_to_json(linear->weights);
        params["intercept"] = vector_to_json(linear->intercept);
    } else if (const auto* tp = std::get_if<TreeParams>(&model.params)) {
        params["tree"] = tree_to_json(*tp);
    } else {
        const auto& forest = std::get<ForestParams>(model.params);
        nlohmann::json trees = nlohmann::json::array();
        for (const TreeParams& t : forest.trees) trees.push_back(tree_to_json(t));
        params["trees"] = std::move(trees);
    }
    j["parameters"] = std::move(params);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump() << '\n';
    if (!out) throw IoError("write failed: " + path);
}

TrainedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("format_version") || j["format_version"].get<int>() != kModelFormatVersion) {
        throw VersionError(path + ": unsupported model format version");
    }
    if (!j.contains("vectorizer_fingerprint")) {
        throw SchemaError(path + ": model file lacks a vectorizer fingerprint");
    }
    TrainedModel model;
    const auto kind = parse_estimator_kind(j.at("kind").get<std::string>());
    if (!kind) throw ParseError(path + ": unknown estimator kind");
    model.spec.kind = *kind;
    model.spec.hparams = hparams_from_json(j.at("hyperparameters"));
    model.spec.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& name : j.at("classes").get<std::vector<std::string>>()) {
        const auto c = parse_comment_class(name);
        if (!c) throw ParseError(path + ": unknown class \"" + name + "\"");
        model.classes.push_back(*c);
    }
    model.vectorizer_fingerprint = j.at("vectorizer_fingerprint").get<std::string>();
    model.n_features = j.at("n_features").get<Index>();
    model.converged = j.at("converged").get<bool>();

    const auto& params = j.at("parameters");
    switch (model.spec.kind) {
        case EstimatorKind::MultinomialNb: {
            NaiveBayesParams nb;
            nb.log_prior = vector_from_json(params.at("log_prior"));
            nb.log_likelihood = matrix_from_json(params.at("log_likelihood"));
            model.params = std::move(nb);
            break;
        }
        case EstimatorKind::LogisticRegression:
        case EstimatorKind::LinearSvc: {
            LinearParams linear;
            linear.weights = matrix_from_json(params.at("weights"));
            linear.intercept = vector_from_json(params.at("intercept"));
            model.params = std::move(linear);
            break;
        }
        case EstimatorKind::DecisionTree:
            model.params = tree_from_json(params.at("tree"));
            break;
        case EstimatorKind::RandomForest: {
            ForestParams forest;
            for (const auto& t : params.at("trees")) forest.trees.push_back(tree_from_json(t));
            model.params = std::move(forest);
            break;
        }
    }
    return model;
}

}  // namespace ytcc
