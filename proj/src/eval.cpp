#include "ytcc/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "ytcc/errors.hpp"
#include "ytcc/rng.hpp"

namespace ytcc {

double accuracy(const std::vector<CommentClass>& y_true, const std::vector<CommentClass>& y_pred) {
    if (y_true.size() != y_pred.size()) throw SchemaError("label sequences differ in length");
    if (y_true.empty()) return 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) hits += y_true[i] == y_pred[i];
    return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

ConfusionMatrix confusion_matrix(const std::vector<CommentClass>& y_true,
                                 const std::vector<CommentClass>& y_pred) {
    if (y_true.size() != y_pred.size()) throw SchemaError("label sequences differ in length");
    ConfusionMatrix m{};
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        m[static_cast<std::size_t>(y_true[i])][static_cast<std::size_t>(y_pred[i])]++;
    }
    return m;
}

F1Scores f1_scores(const std::vector<CommentClass>& y_true, const std::vector<CommentClass>& y_pred) {
    const ConfusionMatrix m = confusion_matrix(y_true, y_pred);
    F1Scores scores;
    std::array<bool, kNumClasses> in_label_set{};
    for (CommentClass c : y_true) in_label_set[static_cast<std::size_t>(c)] = true;
    for (CommentClass c : y_pred) in_label_set[static_cast<std::size_t>(c)] = true;

    double weighted_sum = 0.0;
    double macro_sum = 0.0;
    std::size_t label_count = 0;
    std::size_t support_total = 0;
    for (std::size_t k = 0; k < kNumClasses; ++k) {
        std::size_t tp = m[k][k];
        std::size_t fp = 0;
        std::size_t fn = 0;
        for (std::size_t j = 0; j < kNumClasses; ++j) {
            if (j != k) {
                fp += m[j][k];
                fn += m[k][j];
            }
        }
        ClassMetrics& cm = scores.per_class[k];
        cm.support = tp + fn;
        cm.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
        cm.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
        cm.f1 = cm.precision + cm.recall > 0
                    ? 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall)
                    : 0.0;
        if (in_label_set[k]) {
            macro_sum += cm.f1;
            ++label_count;
            weighted_sum += cm.f1 * static_cast<double>(cm.support);
            support_total += cm.support;
        }
    }
    scores.macro = label_count > 0 ? macro_sum / static_cast<double>(label_count) : 0.0;
    scores.weighted = support_total > 0 ? weighted_sum / static_cast<double>(support_total) : 0.0;
    return scores;
}

// ------------------------------------------------------- cross-validation

std::vector<std::vector<std::size_t>> make_folds(std::size_t n, const CVConfig& cv) {
    if (cv.folds < 2) throw SchemaError("cross-validation needs at least 2 folds");
    if (static_cast<std::size_t>(cv.folds) > n) {
        throw SchemaError("more folds than training records");
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    if (cv.shuffle) {
        Rng rng(cv.seed);
        rng.shuffle(order);
    }
    const std::size_t k = static_cast<std::size_t>(cv.folds);
    const std::size_t base = n / k;
    const std::size_t remainder = n % k;
    std::vector<std::vector<std::size_t>> folds(k);
    std::size_t cursor = 0;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = base + (f < remainder ? 1 : 0);
        folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(cursor),
                        order.begin() + static_cast<std::ptrdiff_t>(cursor + size));
        cursor += size;
    }
    return folds;
}

namespace {

struct VectorizedSplit {
    VectorizerModel vectorizer;
    FeatureMatrix train;
    FeatureMatrix other;
};

/// Fits the vectorizer (and scaler for the df scheme) on `train_docs`
/// only, then transforms both document sets.
VectorizedSplit fit_and_transform(const std::vector<TokenizedComment>& train_docs,
                                  const std::vector<TokenizedComment>& other_docs,
                                  const VectorizerConfig& vconfig, const PipelineSettings& pipeline,
                                  VocabularyAudit* audit) {
    VectorizedSplit out;
    out.vectorizer.pipeline = pipeline;
    out.vectorizer.vocab = fit_vocabulary(train_docs, vconfig, audit);
    if (vconfig.scheme == Scheme::Tfidf) {
        out.train = transform_tfidf(out.vectorizer.vocab, train_docs);
        out.other = transform_tfidf(out.vectorizer.vocab, other_docs);
        return out;
    }
    FeatureMatrix train_counts = transform_counts(out.vectorizer.vocab, train_docs);
    out.vectorizer.scaler = fit_scaler(train_counts);
    out.train = apply_scaler(*out.vectorizer.scaler, train_counts);
    out.other = apply_scaler(*out.vectorizer.scaler, transform_counts(out.vectorizer.vocab, other_docs));
    return out;
}

std::set<CommentClass> classes_in(const std::vector<CommentClass>& labels) {
    return {labels.begin(), labels.end()};
}

}  // namespace

CVResult cross_validate(const EstimatorSpec& spec, const std::vector<TokenizedComment>& docs,
                        const std::vector<CommentClass>& labels, const VectorizerConfig& vconfig,
                        const CVConfig& cv) {
    if (docs.size() != labels.size()) throw SchemaError("docs/labels length mismatch");
    const auto folds = make_folds(docs.size(), cv);
    const std::set<CommentClass> global_classes = classes_in(labels);

    CVResult result;
    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::vector<bool> in_val(docs.size(), false);
        for (std::size_t idx : folds[f]) in_val[idx] = true;

        std::vector<TokenizedComment> fold_train, fold_val;
        std::vector<CommentClass> y_train, y_val;
        for (std::size_t i = 0; i < docs.size(); ++i) {
            if (in_val[i]) {
                fold_val.push_back(docs[i]);
                y_val.push_back(labels[i]);
            } else {
                fold_train.push_back(docs[i]);
                y_train.push_back(labels[i]);
            }
        }

        const std::set<CommentClass> train_classes = classes_in(y_train);
        const std::set<CommentClass> val_classes = classes_in(y_val);
        for (CommentClass c : global_classes) {
            if (!train_classes.count(c)) {
                result.warnings.push_back("fold " + std::to_string(f + 1) + ": class \"" +
                                          to_string(c) + "\" absent from fold-train");
            } else if (!val_classes.count(c)) {
                result.warnings.push_back("fold " + std::to_string(f + 1) + ": class \"" +
                                          to_string(c) + "\" absent from fold-validation");
            }
        }

        VocabularyAudit audit;
        VectorizedSplit split = fit_and_transform(fold_train, fold_val, vconfig, PipelineSettings{},
                                                  cv.record_audit ? &audit : nullptr);
        if (cv.record_audit) {
            FoldAudit fa;
            for (const auto& d : fold_train) fa.train_ids.push_back(d.id);
            for (const auto& d : fold_val) fa.val_ids.push_back(d.id);
            for (const auto& [term, positions] : audit) {
                auto& ids = fa.term_support[term];
                for (std::size_t pos : positions) ids.push_back(fold_train[pos].id);
            }
            result.audits.push_back(std::move(fa));
        }

        const TrainedModel model = train(spec, split.train, y_train);
        const std::vector<CommentClass> predictions = predict(model, split.other);
        result.fold_scores.push_back(accuracy(y_val, predictions));
    }
    double sum = 0.0;
    for (double s : result.fold_scores) sum += s;
    result.mean = sum / static_cast<double>(result.fold_scores.size());
    return result;
}

CVResult cross_validate(const EstimatorSpec& spec, const Dataset& train,
                        const PipelineConfig& pipeline, const VectorizerConfig& vconfig,
                        const CVConfig& cv) {
    std::vector<Comment> comments;
    std::vector<CommentClass> labels;
    comments.reserve(train.size());
    for (const auto& rec : train.records) {
        comments.push_back(rec.comment);
        labels.push_back(rec.label);
    }
    return cross_validate(spec, run_pipeline(comments, pipeline), labels, vconfig, cv);
}

// ------------------------------------------------------------ grid search

std::size_t Grid::cell_count() const {
    std::size_t count = 1;
    for (const auto& dim : dimensions) count *= dim.candidates.size();
    return count;
}

Grid Grid::tuning_defaults(EstimatorKind kind) {
    Grid grid;
    grid.kind = kind;
    switch (kind) {
        case EstimatorKind::LinearSvc:
            grid.dimensions = {{"C", {50.0, 10.0, 1.0, 0.1, 0.01}}};
            break;
        case EstimatorKind::LogisticRegression:
            grid.dimensions = {
                {"C", {100.0, 10.0, 1.0, 0.1, 0.01}},
                {"solver", {std::string("newton-cg"), std::string("lbfgs"), std::string("liblinear")}},
                {"penalty",
                 {std::string("l1"), std::string("l2"), std::string("elasticnet"), std::string("none")}},
            };
            break;
        case EstimatorKind::MultinomialNb:
            grid.dimensions = {
                {"fit_prior", {true, false}},
                {"alpha", {0.0, 0.5, 1.0}},
            };
            break;
        case EstimatorKind::RandomForest:
            grid.dimensions = {
                {"n_estimators", {std::int64_t{10}, std::int64_t{100}, std::int64_t{1000}}},
                {"max_features", {std::string("sqrt"), std::string("log2")}},
                {"criterion", {std::string("gini"), std::string("entropy")}},
            };
            break;
        case EstimatorKind::DecisionTree:
            grid.dimensions = {
                {"criterion", {std::string("gini"), std::string("entropy")}},
                {"max_features",
                 {std::string("sqrt"), std::string("log2"), std::string("auto"), std::string("none")}},
            };
            break;
    }
    return grid;
}

namespace {

// Optimizer preset dimensions: enumerated and reported, but not part of
// the estimator contract (all presets share one convex optimizer).
bool is_preset_dimension(EstimatorKind kind, const std::string& name) {
    return kind == EstimatorKind::LogisticRegression && name == "solver";
}

}  // namespace

GridSearchResult grid_search(const Grid& grid, const Dataset& train, const PipelineConfig& pipeline,
                             const VectorizerConfig& vconfig, const CVConfig& cv,
                             std::uint64_t estimator_seed) {
    if (grid.dimensions.empty()) throw SchemaError("empty grid");
    for (const auto& dim : grid.dimensions) {
        if (dim.candidates.empty()) throw SchemaError("grid dimension \"" + dim.name + "\" is empty");
    }

    std::vector<Comment> comments;
    std::vector<CommentClass> labels;
    for (const auto& rec : train.records) {
        comments.push_back(rec.comment);
        labels.push_back(rec.label);
    }
    const std::vector<TokenizedComment> docs = run_pipeline(comments, pipeline);

    GridSearchResult result;
    std::unordered_map<std::string, CVResult> cache;

    std::vector<std::size_t> odometer(grid.dimensions.size(), 0);
    const std::size_t total = grid.cell_count();
    for (std::size_t cell = 0; cell < total; ++cell) {
        GridAssignment assignment;
        EstimatorSpec spec;
        spec.kind = grid.kind;
        spec.seed = estimator_seed;
        for (std::size_t d = 0; d < grid.dimensions.size(); ++d) {
            const auto& dim = grid.dimensions[d];
            const HParamValue& value = dim.candidates[odometer[d]];
            assignment[dim.name] = value;
            if (!is_preset_dimension(grid.kind, dim.name)) spec.hparams.set(dim.name, value);
        }
        // advance the odometer; last dimension varies fastest
        for (std::size_t d = grid.dimensions.size(); d-- > 0;) {
            if (++odometer[d] < grid.dimensions[d].candidates.size()) break;
            odometer[d] = 0;
        }

        try {
            validate_spec(spec);
        } catch (const UnsupportedSpecError& e) {
            result.skipped.push_back({std::move(assignment), e.what()});
            continue;
        } catch (const Error& e) {
            result.failed.push_back({std::move(assignment), e.what()});
            continue;
        }

        const std::string key = spec_to_string(spec);
        try {
            const auto cached = cache.find(key);
            const CVResult cv_result = cached != cache.end()
                                           ? cached->second
                                           : cross_validate(spec, docs, labels, vconfig, cv);
            cache.emplace(key, cv_result);
            result.evaluated.push_back({std::move(assignment), std::move(spec), cv_result});
        } catch (const Error& e) {
            result.failed.push_back({std::move(assignment), e.what()});
        }
    }

    if (result.evaluated.empty()) {
        std::string message = "every grid cell failed or was skipped";
        for (const auto& f : result.failed) message += "; " + f.error;
        for (const auto& s : result.skipped) message += "; skipped: " + s.reason;
        throw Error(message);
    }
    result.best_index = 0;
    for (std::size_t i = 1; i < result.evaluated.size(); ++i) {
        if (result.evaluated[i].cv.mean > result.evaluated[result.best_index].cv.mean) {
            result.best_index = i;  // strict >: ties keep the first-enumerated cell
        }
    }
    return result;
}

// -------------------------------------------------------- learning curve

std::vector<std::vector<std::size_t>> learning_curve_subsets(std::size_t n_train,
                                                             const std::vector<double>& sizes,
                                                             std::uint64_t seed) {
    if (sizes.empty()) throw SchemaError("learning curve needs at least one size");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!(sizes[i] > 0.0 && sizes[i] <= 1.0)) throw SchemaError("sizes must lie in (0, 1]");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw SchemaError("sizes must be ascending");
    }
    std::vector<std::size_t> permutation(n_train);
    for (std::size_t i = 0; i < permutation.size(); ++i) permutation[i] = i;
    Rng rng(seed);
    rng.shuffle(permutation);

    std::vector<std::vector<std::size_t>> subsets;
    for (double frac : sizes) {
        const std::size_t k = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(frac * static_cast<double>(n_train))));
        std::vector<std::size_t> subset(
            permutation.begin(),
            permutation.begin() + static_cast<std::ptrdiff_t>(std::min(k, permutation.size())));
        std::sort(subset.begin(), subset.end());  // restore dataset order
        subsets.push_back(std::move(subset));
    }
    return subsets;
}

std::vector<LearningCurvePoint> learning_curve(const EstimatorSpec& spec, const Dataset& train_set,
                                               const Dataset& test_set, const PipelineConfig& pipeline,
                                               const VectorizerConfig& vconfig,
                                               const std::vector<double>& sizes, std::uint64_t seed) {
    std::vector<Comment> train_comments, test_comments;
    std::vector<CommentClass> y_train, y_test;
    for (const auto& rec : train_set.records) {
        train_comments.push_back(rec.comment);
        y_train.push_back(rec.label);
    }
    for (const auto& rec : test_set.records) {
        test_comments.push_back(rec.comment);
        y_test.push_back(rec.label);
    }
    const std::vector<TokenizedComment> train_docs = run_pipeline(train_comments, pipeline);
    const std::vector<TokenizedComment> test_docs = run_pipeline(test_comments, pipeline);
    const std::set<CommentClass> global_classes = classes_in(y_train);

    const std::vector<std::vector<std::size_t>> subsets =
        learning_curve_subsets(train_docs.size(), sizes, seed);

    std::vector<LearningCurvePoint> points;
    for (std::size_t s = 0; s < sizes.size(); ++s) {
        const double frac = sizes[s];
        const std::vector<std::size_t>& subset = subsets[s];

        LearningCurvePoint point;
        point.train_size = frac;
        std::vector<TokenizedComment> sub_docs;
        std::vector<CommentClass> sub_labels;
        for (std::size_t idx : subset) {
            sub_docs.push_back(train_docs[idx]);
            sub_labels.push_back(y_train[idx]);
        }
        const std::set<CommentClass> sub_classes = classes_in(sub_labels);
        if (sub_classes.size() != global_classes.size()) {
            point.flagged = true;
            for (CommentClass c : global_classes) {
                if (!sub_classes.count(c)) {
                    point.note += (point.note.empty() ? "missing class " : ", ") + to_string(c);
                }
            }
        }
        if (sub_classes.size() < 2) {
            point.accuracy = std::numeric_limits<double>::quiet_NaN();
            point.note += (point.note.empty() ? "" : "; ") + std::string("untrainable subsample");
            points.push_back(std::move(point));
            continue;
        }
        try {
            VectorizedSplit split =
                fit_and_transform(sub_docs, test_docs, vconfig, PipelineSettings{}, nullptr);
            const TrainedModel model = train(spec, split.train, sub_labels);
            point.accuracy = accuracy(y_test, predict(model, split.other));
        } catch (const Error& e) {
            point.flagged = true;
            point.accuracy = std::numeric_limits<double>::quiet_NaN();
            point.note += (point.note.empty() ? "" : "; ") + std::string(e.what());
        }
        points.push_back(std::move(point));
    }
    return points;
}

// ---------------------------------------------------------------- report

PerClassReport per_class_report(const TrainedModel& model, const VectorizerModel& vectorizer,
                                const PipelineConfig& pipeline, const Dataset& test) {
    std::vector<Comment> comments;
    std::vector<CommentClass> y_true;
    for (const auto& rec : test.records) {
        comments.push_back(rec.comment);
        y_true.push_back(rec.label);
    }
    const FeatureMatrix X = vectorize(vectorizer, run_pipeline(comments, pipeline));
    const std::vector<CommentClass> y_pred = predict(model, X);

    PerClassReport report;
    const F1Scores scores = f1_scores(y_true, y_pred);
    report.per_class = scores.per_class;
    report.confusion = confusion_matrix(y_true, y_pred);
    report.accuracy = accuracy(y_true, y_pred);
    return report;
}

TrainOutcome train_and_evaluate(const EstimatorSpec& spec, const Dataset& train_set,
                                const Dataset& test_set, const PipelineConfig& pipeline,
                                const VectorizerConfig& vconfig, const CVConfig& cv,
                                const std::vector<double>& curve_sizes) {
    std::vector<Comment> train_comments, test_comments;
    std::vector<CommentClass> y_train, y_test;
    for (const auto& rec : train_set.records) {
        train_comments.push_back(rec.comment);
        y_train.push_back(rec.label);
    }
    for (const auto& rec : test_set.records) {
        test_comments.push_back(rec.comment);
        y_test.push_back(rec.label);
    }
    const std::vector<TokenizedComment> train_docs = run_pipeline(train_comments, pipeline);
    const std::vector<TokenizedComment> test_docs = run_pipeline(test_comments, pipeline);

    TrainOutcome outcome;
    outcome.report.spec = spec;
    outcome.report.scheme = vconfig.scheme;

    const CVResult cv_result = cross_validate(spec, train_docs, y_train, vconfig, cv);
    outcome.report.cv_score = cv_result.mean;
    outcome.report.cv_fold_scores = cv_result.fold_scores;
    outcome.report.warnings = cv_result.warnings;

    VectorizedSplit split =
        fit_and_transform(train_docs, test_docs, vconfig, settings_of(pipeline), nullptr);
    outcome.vectorizer = std::move(split.vectorizer);
    outcome.model = train(spec, split.train, y_train);
    outcome.model.vectorizer_fingerprint = vectorizer_fingerprint(outcome.vectorizer);
    outcome.report.converged = outcome.model.converged;
    if (!outcome.model.converged) {
        outcome.report.warnings.push_back("optimizer did not converge within max_iter");
    }

    const std::vector<CommentClass> y_pred = predict(outcome.model, split.other);
    outcome.report.test_accuracy = accuracy(y_test, y_pred);
    const F1Scores scores = f1_scores(y_test, y_pred);
    outcome.report.f1_weighted = scores.weighted;
    outcome.report.f1_macro = scores.macro;
    outcome.report.per_class = scores.per_class;
    outcome.report.confusion = confusion_matrix(y_test, y_pred);

    if (!curve_sizes.empty()) {
        outcome.report.learning_curve =
            learning_curve(spec, train_set, test_set, pipeline, vconfig, curve_sizes, cv.seed);
    }
    return outcome;
}

// ----------------------------------------------------- report persistence

namespace {

constexpr int kReportFormatVersion = 1;

nlohmann::json hparams_json(const Hyperparameters& hp) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : hp.values) {
        std::visit([&](const auto& v) { j[name] = v; }, value);
    }
    return j;
}

}  // namespace

void save_report(const EvaluationReport& report, const std::string& path) {
    nlohmann::json j;
    j["format_version"] = kReportFormatVersion;
    j["type"] = "ytcc.report";
    j["kind"] = to_string(report.spec.kind);
    j["hyperparameters"] = hparams_json(report.spec.hparams);
    j["seed"] = report.spec.seed;
    j["scheme"] = to_string(report.scheme);
    j["cv_score"] = report.cv_score;
    j["cv_fold_scores"] = report.cv_fold_scores;
    j["test_accuracy"] = report.test_accuracy;
    j["f1_weighted"] = report.f1_weighted;
    j["f1_macro"] = report.f1_macro;
    nlohmann::json per_class = nlohmann::json::object();
    for (int k = 0; k < kNumClasses; ++k) {
        const ClassMetrics& cm = report.per_class[static_cast<std::size_t>(k)];
        per_class[to_string(static_cast<CommentClass>(k))] = {{"precision", cm.precision},
                                                              {"recall", cm.recall},
                                                              {"f1", cm.f1},
                                                              {"support", cm.support}};
    }
    j["per_class"] = std::move(per_class);
    nlohmann::json confusion = nlohmann::json::array();
    for (const auto& row : report.confusion) confusion.push_back(row);
    j["confusion"] = std::move(confusion);
    nlohmann::json curve = nlohmann::json::array();
    for (const auto& point : report.learning_curve) {
        nlohmann::json p = {{"train_size", point.train_size},
                            {"flagged", point.flagged},
                            {"note", point.note}};
        if (std::isnan(point.accuracy)) p["accuracy"] = nullptr;
        else p["accuracy"] = point.accuracy;
        curve.push_back(std::move(p));
    }
    j["learning_curve"] = std::move(curve);
    j["warnings"] = report.warnings;
    j["converged"] = report.converged;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

EvaluationReport load_report(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("format_version") || j["format_version"].get<int>() != kReportFormatVersion) {
        throw VersionError(path + ": unsupported report format version");
    }
    EvaluationReport report;
    const auto kind = parse_estimator_kind(j.at("kind").get<std::string>());
    if (!kind) throw ParseError(path + ": unknown estimator kind");
    report.spec.kind = *kind;
    for (const auto& [name, value] : j.at("hyperparameters").items()) {
        if (value.is_boolean()) report.spec.hparams.set(name, value.get<bool>());
        else if (value.is_number_integer()) report.spec.hparams.set(name, value.get<std::int64_t>());
        else if (value.is_number_float()) report.spec.hparams.set(name, value.get<double>());
        else report.spec.hparams.set(name, value.get<std::string>());
    }
    report.spec.seed = j.at("seed").get<std::uint64_t>();
    const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
    if (!scheme) throw ParseError(path + ": unknown scheme");
    report.scheme = *scheme;
    report.cv_score = j.at("cv_score").get<double>();
    report.cv_fold_scores = j.at("cv_fold_scores").get<std::vector<double>>();
    report.test_accuracy = j.at("test_accuracy").get<double>();
    report.f1_weighted = j.at("f1_weighted").get<double>();
    report.f1_macro = j.at("f1_macro").get<double>();
    for (int k = 0; k < kNumClasses; ++k) {
        const auto& cm = j.at("per_class").at(to_string(static_cast<CommentClass>(k)));
        ClassMetrics& out = report.per_class[static_cast<std::size_t>(k)];
        out.precision = cm.at("precision").get<double>();
        out.recall = cm.at("recall").get<double>();
        out.f1 = cm.at("f1").get<double>();
        out.support = cm.at("support").get<std::size_t>();
    }
    const auto confusion = j.at("confusion").get<std::vector<std::vector<std::size_t>>>();
    if (confusion.size() != kNumClasses) throw ParseError(path + ": confusion matrix shape");
    for (std::size_t r = 0; r < kNumClasses; ++r) {
        if (confusion[r].size() != kNumClasses) throw ParseError(path + ": confusion matrix shape");
        for (std::size_t c = 0; c < kNumClasses; ++c) report.confusion[r][c] = confusion[r][c];
    }
    for (const auto& p : j.at("learning_curve")) {
        LearningCurvePoint point;
        point.train_size = p.at("train_size").get<double>();
        point.accuracy = p.at("accuracy").is_null() ? std::numeric_limits<double>::quiet_NaN()
                                                    : p.at("accuracy").get<double>();
        point.flagged = p.at("flagged").get<bool>();
        point.note = p.at("note").get<std::string>();
        report.learning_curve.push_back(std::move(point));
    }
    report.warnings = j.at("warnings").get<std::vector<std::string>>();
    report.converged = j.at("converged").get<bool>();
    return report;
}

}  // namespace ytcc
