#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ytcc/corpus.hpp"
#include "ytcc/features.hpp"
#include "ytcc/models.hpp"
#include "ytcc/preprocess.hpp"

namespace ytcc {

// ------------------------------------------------------------- metrics

double accuracy(const std::vector<CommentClass>& y_true, const std::vector<CommentClass>& y_pred);

/// confusion[true class][predicted class]
using ConfusionMatrix = std::array<std::array<std::size_t, kNumClasses>, kNumClasses>;

ConfusionMatrix confusion_matrix(const std::vector<CommentClass>& y_true,
                                 const std::vector<CommentClass>& y_pred);

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

/// Per-class f1 = 2PR/(P+R), 0 when P+R = 0. Macro and weighted averages
/// run over the classes present in y_true or y_pred.
struct F1Scores {
    double macro = 0.0;
    double weighted = 0.0;
    std::array<ClassMetrics, kNumClasses> per_class{};
};

F1Scores f1_scores(const std::vector<CommentClass>& y_true, const std::vector<CommentClass>& y_pred);

// ------------------------------------------------------- cross-validation

struct CVConfig {
    int folds = 5;
    std::uint64_t seed = 0;
    bool shuffle = true;
    bool record_audit = false;  // capture per-fold vocabulary provenance
};

/// Which training documents supported each retained vocabulary term in a
/// fold fit; comment ids, for leakage checks.
struct FoldAudit {
    std::vector<std::string> train_ids;
    std::vector<std::string> val_ids;
    std::unordered_map<std::string, std::vector<std::string>> term_support;
};

struct CVResult {
    std::vector<double> fold_scores;
    double mean = 0.0;
    std::vector<std::string> warnings;
    std::vector<FoldAudit> audits;
};

/// Contiguous fold ranges over a (possibly shuffled) index permutation;
/// sizes differ by at most one.
std::vector<std::vector<std::size_t>> make_folds(std::size_t n, const CVConfig& cv);

/// Per fold: vectorizer and scaler fitted on the fold-train documents
/// only, model trained, fold-validation accuracy recorded.
CVResult cross_validate(const EstimatorSpec& spec, const std::vector<TokenizedComment>& docs,
                        const std::vector<CommentClass>& labels, const VectorizerConfig& vconfig,
                        const CVConfig& cv);

CVResult cross_validate(const EstimatorSpec& spec, const Dataset& train,
                        const PipelineConfig& pipeline, const VectorizerConfig& vconfig,
                        const CVConfig& cv);

// ------------------------------------------------------------ grid search

struct GridDimension {
    std::string name;
    std::vector<HParamValue> candidates;
};

struct Grid {
    EstimatorKind kind = EstimatorKind::LogisticRegression;
    std::vector<GridDimension> dimensions;  // listing order; last varies fastest

    std::size_t cell_count() const;

    /// The tuning grids used throughout: every hyperparameter list
    /// verbatim, including optimizer presets ("solver") and penalties the
    /// optimizer rejects (skipped during search).
    static Grid tuning_defaults(EstimatorKind kind);
};

using GridAssignment = std::map<std::string, HParamValue>;

struct GridCellResult {
    GridAssignment assignment;
    EstimatorSpec spec;  // presets removed, aliases resolved
    CVResult cv;
};

struct SkippedCell {
    GridAssignment assignment;
    std::string reason;
};

struct FailedCell {
    GridAssignment assignment;
    std::string error;
};

struct GridSearchResult {
    std::vector<GridCellResult> evaluated;  // enumeration order
    std::vector<SkippedCell> skipped;
    std::vector<FailedCell> failed;
    std::size_t best_index = 0;

    const GridCellResult& best() const { return evaluated[best_index]; }
};

/// Evaluates every grid cell via cross-validation. Best cell = highest
/// mean fold accuracy, ties resolved to the first-enumerated cell.
/// Cells differing only in optimizer presets share one evaluation.
/// Throws when every cell failed or was skipped.
GridSearchResult grid_search(const Grid& grid, const Dataset& train, const PipelineConfig& pipeline,
                             const VectorizerConfig& vconfig, const CVConfig& cv,
                             std::uint64_t estimator_seed);

// -------------------------------------------------------- learning curve

struct LearningCurvePoint {
    double train_size = 0.0;  // fraction of the training set
    double accuracy = 0.0;    // NaN when the subsample was untrainable
    bool flagged = false;
    std::string note;
};

/// The seeded nested subsamples behind learning_curve: prefixes of one
/// permutation, restored to dataset order. subsets[i] belongs to
/// sizes[i]; smaller fractions are subsets of larger ones and a fraction
/// of 1.0 is the identity.
std::vector<std::vector<std::size_t>> learning_curve_subsets(std::size_t n_train,
                                                             const std::vector<double>& sizes,
                                                             std::uint64_t seed);

/// For each size: refit the full pipeline (vocabulary, scaler, model) on
/// the seeded nested subsample and score on the fixed test set.
std::vector<LearningCurvePoint> learning_curve(const EstimatorSpec& spec, const Dataset& train,
                                               const Dataset& test, const PipelineConfig& pipeline,
                                               const VectorizerConfig& vconfig,
                                               const std::vector<double>& sizes, std::uint64_t seed);

// ---------------------------------------------------------------- report

struct PerClassReport {
    std::array<ClassMetrics, kNumClasses> per_class{};
    ConfusionMatrix confusion{};
    double accuracy = 0.0;
};

PerClassReport per_class_report(const TrainedModel& model, const VectorizerModel& vectorizer,
                                const PipelineConfig& pipeline, const Dataset& test);

struct EvaluationReport {
    EstimatorSpec spec;
    Scheme scheme = Scheme::DfCounts;
    double cv_score = 0.0;  // mean fold accuracy
    std::vector<double> cv_fold_scores;
    double test_accuracy = 0.0;
    double f1_weighted = 0.0;
    double f1_macro = 0.0;
    std::array<ClassMetrics, kNumClasses> per_class{};
    ConfusionMatrix confusion{};
    std::vector<LearningCurvePoint> learning_curve;
    std::vector<std::string> warnings;
    bool converged = true;
};

void save_report(const EvaluationReport& report, const std::string& path);
EvaluationReport load_report(const std::string& path);

struct TrainOutcome {
    TrainedModel model;
    VectorizerModel vectorizer;
    EvaluationReport report;
};

/// The end-to-end protocol: cross-validate on the training split, fit the
/// vectorizer and model on all of it, score the held-out test split, and
/// optionally trace a learning curve over `curve_sizes`.
TrainOutcome train_and_evaluate(const EstimatorSpec& spec, const Dataset& train, const Dataset& test,
                                const PipelineConfig& pipeline, const VectorizerConfig& vconfig,
                                const CVConfig& cv, const std::vector<double>& curve_sizes = {});

}  // namespace ytcc
