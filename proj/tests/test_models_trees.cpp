#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "ytcc/errors.hpp"
#include "ytcc/models.hpp"
#include "ytcc/rng.hpp"
#include "ytcc/tree.hpp"

using namespace ytcc;

namespace {

FeatureMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
    FeatureMatrix m;
    const Index r = static_cast<Index>(rows.size());
    const Index c = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
    std::vector<Triplet> triplets;
    for (Index i = 0; i < r; ++i) {
        for (Index j = 0; j < c; ++j) {
            const double v = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v != 0.0) triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
        }
    }
    m.values.resize(r, c);
    m.values.setFromTriplets(triplets.begin(), triplets.end());
    for (Index i = 0; i < r; ++i) m.row_ids.push_back("row" + std::to_string(i));
    return m;
}

// Random nonneg count-like matrix plus labels loosely tied to features.
std::pair<FeatureMatrix, std::vector<CommentClass>> random_problem(std::uint64_t seed, Index rows,
                                                                   Index cols) {
    Rng rng(seed);
    std::vector<std::vector<double>> data;
    std::vector<CommentClass> y;
    for (Index r = 0; r < rows; ++r) {
        std::vector<double> row(static_cast<std::size_t>(cols), 0.0);
        for (Index c = 0; c < cols; ++c) {
            if (rng.below(2) == 0) row[static_cast<std::size_t>(c)] = static_cast<double>(rng.below(4));
        }
        const int cls = static_cast<int>(rng.below(3));
        row[static_cast<std::size_t>(cls)] += 2.0;  // signal
        data.push_back(std::move(row));
        y.push_back(static_cast<CommentClass>(cls));
    }
    return {matrix_from_rows(data), y};
}

EstimatorSpec tree_spec(const std::string& criterion, const std::string& max_features) {
    EstimatorSpec spec;
    spec.kind = EstimatorKind::DecisionTree;
    spec.hparams.set("criterion", criterion);
    spec.hparams.set("max_features", max_features);
    return spec;
}

EstimatorSpec forest_spec(std::int64_t n_estimators, std::uint64_t seed) {
    EstimatorSpec spec;
    spec.kind = EstimatorKind::RandomForest;
    spec.hparams.set("n_estimators", n_estimators);
    spec.hparams.set("max_features", std::string("sqrt"));
    spec.hparams.set("criterion", std::string("gini"));
    spec.seed = seed;
    return spec;
}

// Recomputes counts/impurities over an explicit sample set to audit the
// built structure.
void audit_tree(const TreeParams& tree, const DenseMatrix& X, const std::vector<int>& y,
                const std::vector<int>& samples, int node_index, int n_classes,
                tree::Criterion criterion, std::size_t* leaf_total) {
    const TreeNode& node = tree.nodes[static_cast<std::size_t>(node_index)];
    std::vector<double> counts(static_cast<std::size_t>(n_classes), 0.0);
    for (int row : samples) counts[static_cast<std::size_t>(y[static_cast<std::size_t>(row)])] += 1.0;
    const double total = static_cast<double>(samples.size());

    if (node.feature < 0) {
        REQUIRE(node.counts.size() == counts.size());
        for (std::size_t k = 0; k < counts.size(); ++k) CHECK(node.counts[k] == counts[k]);
        CHECK(total > 0.0);  // leaves hold at least one sample
        *leaf_total += samples.size();
        return;
    }
    std::vector<int> left, right;
    for (int row : samples) {
        (X(row, node.feature) <= node.threshold ? left : right).push_back(row);
    }
    CHECK_FALSE(left.empty());
    CHECK_FALSE(right.empty());

    std::vector<double> left_counts(static_cast<std::size_t>(n_classes), 0.0);
    std::vector<double> right_counts(static_cast<std::size_t>(n_classes), 0.0);
    for (int row : left) left_counts[static_cast<std::size_t>(y[static_cast<std::size_t>(row)])] += 1.0;
    for (int row : right) right_counts[static_cast<std::size_t>(y[static_cast<std::size_t>(row)])] += 1.0;
    const double parent = tree::impurity(counts, total, criterion);
    const double weighted =
        (static_cast<double>(left.size()) * tree::impurity(left_counts, static_cast<double>(left.size()), criterion) +
         static_cast<double>(right.size()) *
             tree::impurity(right_counts, static_cast<double>(right.size()), criterion)) /
        total;
    CHECK(weighted <= parent + 1e-12);  // splits never increase impurity

    audit_tree(tree, X, y, left, node.left, n_classes, criterion, leaf_total);
    audit_tree(tree, X, y, right, node.right, n_classes, criterion, leaf_total);
}

}  // namespace

TEST_CASE("impurity functions match hand values") {
    CHECK(tree::impurity({2, 2}, 4, tree::Criterion::Gini) == doctest::Approx(0.5));
    CHECK(tree::impurity({4, 0}, 4, tree::Criterion::Gini) == doctest::Approx(0.0));
    CHECK(tree::impurity({2, 2}, 4, tree::Criterion::Entropy) == doctest::Approx(1.0));
    CHECK(tree::impurity({1, 1, 1, 1}, 4, tree::Criterion::Entropy) == doctest::Approx(2.0));
    CHECK(tree::impurity({3, 1}, 4, tree::Criterion::Gini) == doctest::Approx(1.0 - 0.5625 - 0.0625));
}

TEST_CASE("max_features resolution follows sqrt/log2/all") {
    CHECK(tree::resolve_max_features("sqrt", 2210) == 47);
    CHECK(tree::resolve_max_features("log2", 2210) == 11);
    CHECK(tree::resolve_max_features("all", 2210) == 2210);
    CHECK(tree::resolve_max_features("sqrt", 1) == 1);
    CHECK_THROWS_AS(tree::resolve_max_features("bogus", 10), SchemaError);
}

TEST_CASE("decision tree reaches training accuracy 1.0 on separable data") {
    const FeatureMatrix X = matrix_from_rows({
        {0.0, 1.0}, {0.2, 2.0}, {0.1, 3.0},  // class A: low feature 0
        {1.0, 1.5}, {1.2, 2.5}, {0.9, 0.5},  // class B: high feature 0
    });
    const std::vector<CommentClass> y = {CommentClass::Positive, CommentClass::Positive,
                                         CommentClass::Positive, CommentClass::Negative,
                                         CommentClass::Negative, CommentClass::Negative};
    for (const char* criterion : {"gini", "entropy"}) {
        const TrainedModel model = train(tree_spec(criterion, "all"), X, y);
        CHECK(predict(model, X) == y);
    }
}

TEST_CASE("grown trees satisfy the impurity-decrease audit and leaf accounting") {
    const auto [X, y] = random_problem(77, 80, 6);
    const DenseMatrix dense = DenseMatrix(X.values);
    std::vector<int> yi;
    for (CommentClass c : y) yi.push_back(static_cast<int>(c));
    std::vector<int> samples;
    for (int i = 0; i < static_cast<int>(y.size()); ++i) samples.push_back(i);

    for (auto criterion : {tree::Criterion::Gini, tree::Criterion::Entropy}) {
        Rng rng(5);
        const TreeParams tree_params =
            tree::build_tree(dense, yi, samples, kNumClasses, criterion, 6, rng);
        std::size_t leaf_total = 0;
        audit_tree(tree_params, dense, yi, samples, 0, kNumClasses, criterion, &leaf_total);
        CHECK(leaf_total == y.size());  // every sample lands in exactly one leaf
    }
}

TEST_CASE("pure-leaf growth: training accuracy is perfect when duplicates agree") {
    const auto [X, y] = random_problem(123, 60, 6);
    const TrainedModel model = train(tree_spec("gini", "all"), X, y);
    // With all features available and distinct rows, the tree memorises.
    const auto predictions = predict(model, X);
    std::size_t agree = 0;
    for (std::size_t i = 0; i < y.size(); ++i) agree += predictions[i] == y[i];
    // Identical feature rows with conflicting labels are the only misses.
    std::map<std::string, std::set<int>> row_labels;
    for (Index r = 0; r < X.rows(); ++r) {
        std::string key;
        for (Index c = 0; c < X.cols(); ++c) key += std::to_string(X.values.coeff(r, c)) + ",";
        row_labels[key].insert(static_cast<int>(y[static_cast<std::size_t>(r)]));
    }
    std::size_t conflicted = 0;
    for (Index r = 0; r < X.rows(); ++r) {
        std::string key;
        for (Index c = 0; c < X.cols(); ++c) key += std::to_string(X.values.coeff(r, c)) + ",";
        if (row_labels[key].size() > 1) ++conflicted;
    }
    CHECK(agree + conflicted >= y.size());
}

TEST_CASE("forest training is deterministic for a fixed seed") {
    const auto [X, y] = random_problem(31, 50, 5);
    const TrainedModel a = train(forest_spec(7, 42), X, y);
    const TrainedModel b = train(forest_spec(7, 42), X, y);
    const auto& fa = std::get<ForestParams>(a.params);
    const auto& fb = std::get<ForestParams>(b.params);
    REQUIRE(fa.trees.size() == fb.trees.size());
    for (std::size_t t = 0; t < fa.trees.size(); ++t) {
        REQUIRE(fa.trees[t].nodes.size() == fb.trees[t].nodes.size());
        for (std::size_t n = 0; n < fa.trees[t].nodes.size(); ++n) {
            CHECK(fa.trees[t].nodes[n].feature == fb.trees[t].nodes[n].feature);
            CHECK(fa.trees[t].nodes[n].threshold == fb.trees[t].nodes[n].threshold);
            CHECK(fa.trees[t].nodes[n].left == fb.trees[t].nodes[n].left);
        }
    }
    const TrainedModel c = train(forest_spec(7, 43), X, y);
    const auto& fc = std::get<ForestParams>(c.params);
    bool any_difference = false;
    for (std::size_t t = 0; t < fa.trees.size() && !any_difference; ++t) {
        if (fa.trees[t].nodes.size() != fc.trees[t].nodes.size()) any_difference = true;
        else {
            for (std::size_t n = 0; n < fa.trees[t].nodes.size(); ++n) {
                if (fa.trees[t].nodes[n].feature != fc.trees[t].nodes[n].feature ||
                    fa.trees[t].nodes[n].threshold != fc.trees[t].nodes[n].threshold) {
                    any_difference = true;
                    break;
                }
            }
        }
    }
    CHECK(any_difference);
}

TEST_CASE("a one-tree forest equals the tree built from its bootstrap stream") {
    const auto [X, y] = random_problem(59, 40, 5);
    EstimatorSpec spec = forest_spec(1, 7);
    const TrainedModel forest_model = train(spec, X, y);
    const auto& forest = std::get<ForestParams>(forest_model.params);
    REQUIRE(forest.trees.size() == 1);

    // Rebuild directly with the same derived stream and bootstrap.
    std::vector<int> yi;
    for (CommentClass c : y) yi.push_back(static_cast<int>(c));
    const DenseMatrix dense = DenseMatrix(X.values);
    Rng rng = tree::forest_tree_rng(7, 0);
    std::vector<int> sample = tree::bootstrap_sample(rng, static_cast<int>(y.size()));
    const int max_features = tree::resolve_max_features("sqrt", X.cols());
    const TreeParams direct = tree::build_tree(dense, yi, std::move(sample),
                                               static_cast<int>(forest_model.classes.size()),
                                               tree::Criterion::Gini, max_features, rng);
    REQUIRE(forest.trees[0].nodes.size() == direct.nodes.size());
    for (std::size_t n = 0; n < direct.nodes.size(); ++n) {
        CHECK(forest.trees[0].nodes[n].feature == direct.nodes[n].feature);
        CHECK(forest.trees[0].nodes[n].threshold == direct.nodes[n].threshold);
        CHECK(forest.trees[0].nodes[n].counts == direct.nodes[n].counts);
    }
}

TEST_CASE("forest vote fractions sum to one and argmax equals predict") {
    const auto [X, y] = random_problem(67, 45, 5);
    const TrainedModel model = train(forest_spec(9, 3), X, y);
    const DenseMatrix scores = predict_scores(model, X);
    const auto predictions = predict(model, X);
    for (Index r = 0; r < scores.rows(); ++r) {
        CHECK(scores.row(r).sum() == doctest::Approx(1.0).epsilon(1e-12));
        Index best = 0;
        for (Index k = 1; k < scores.cols(); ++k) {
            if (scores(r, k) > scores(r, best)) best = k;
        }
        CHECK(model.classes[static_cast<std::size_t>(best)] ==
              predictions[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("forest ties resolve to the lowest class index") {
    // Two trees voting for different classes -> tie -> lowest index wins.
    TrainedModel model;
    model.spec = forest_spec(2, 0);
    model.classes = {CommentClass::Positive, CommentClass::Interrogative};
    model.n_features = 1;
    TreeParams vote_a;
    vote_a.nodes.push_back(TreeNode{-1, 0.0, -1, -1, {1.0, 0.0}, 0});
    TreeParams vote_b;
    vote_b.nodes.push_back(TreeNode{-1, 0.0, -1, -1, {0.0, 1.0}, 1});
    model.params = ForestParams{{vote_a, vote_b}};

    const FeatureMatrix X = matrix_from_rows({{0.5}});
    CHECK(predict(model, X)[0] == CommentClass::Positive);
}

TEST_CASE("single-tree scores are leaf class fractions") {
    const FeatureMatrix X = matrix_from_rows({{0.0}, {0.0}, {1.0}});
    const std::vector<CommentClass> y = {CommentClass::Positive, CommentClass::Negative,
                                         CommentClass::Negative};
    // No split improves gini here beyond separating feature 0; the left
    // leaf keeps one sample of each class.
    const TrainedModel model = train(tree_spec("gini", "all"), X, y);
    const DenseMatrix scores = predict_scores(model, X);
    for (Index r = 0; r < scores.rows(); ++r) {
        CHECK(scores.row(r).sum() == doctest::Approx(1.0));
    }
    CHECK(predict(model, X)[0] == CommentClass::Positive);  // 50/50 leaf -> lowest index
}

TEST_CASE("models round-trip through save/load with identical predictions") {
    const auto [X, y] = random_problem(91, 50, 6);
    const auto dir = std::filesystem::temp_directory_path();
    std::vector<EstimatorSpec> specs = {
        tree_spec("gini", "all"),
        forest_spec(5, 11),
    };
    EstimatorSpec nb;
    nb.kind = EstimatorKind::MultinomialNb;
    specs.push_back(nb);
    EstimatorSpec logistic;
    logistic.kind = EstimatorKind::LogisticRegression;
    specs.push_back(logistic);
    EstimatorSpec svc;
    svc.kind = EstimatorKind::LinearSvc;
    specs.push_back(svc);

    for (const auto& spec : specs) {
        TrainedModel model = train(spec, X, y);
        model.vectorizer_fingerprint = "fp0123456789abcdef";
        const auto path = (dir / ("ytcc_model_" + to_string(spec.kind) + ".json")).string();
        save_model(model, path);
        const TrainedModel loaded = load_model(path);
        CHECK(loaded.vectorizer_fingerprint == model.vectorizer_fingerprint);
        CHECK(loaded.classes == model.classes);
        CHECK(loaded.n_features == model.n_features);
        CHECK(predict(loaded, X) == predict(model, X));
    }
}

TEST_CASE("loading a wrong format version fails loudly") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = (dir / "ytcc_badversion.json").string();
    {
        std::ofstream out(path);
        out << "{\"format_version\": 999, \"type\": \"ytcc.model\"}";
    }
    CHECK_THROWS_AS(load_model(path), VersionError);

    const auto no_fp = (dir / "ytcc_nofp.json").string();
    {
        std::ofstream out(no_fp);
        out << "{\"format_version\": 1, \"type\": \"ytcc.model\", \"kind\": \"multinomial_nb\"}";
    }
    CHECK_THROWS_AS(load_model(no_fp), SchemaError);
}

TEST_CASE("spec validation rejects unknown names and unsupported penalties") {
    EstimatorSpec spec;
    spec.kind = EstimatorKind::LinearSvc;
    spec.hparams.set("alpha", 1.0);
    CHECK_THROWS_AS(validate_spec(spec), SchemaError);

    EstimatorSpec logistic;
    logistic.kind = EstimatorKind::LogisticRegression;
    logistic.hparams.set("penalty", std::string("l1"));
    CHECK_THROWS_AS(validate_spec(logistic), UnsupportedSpecError);
    logistic.hparams.set("penalty", std::string("elasticnet"));
    CHECK_THROWS_AS(validate_spec(logistic), UnsupportedSpecError);
    logistic.hparams.set("penalty", std::string("none"));
    CHECK_NOTHROW(validate_spec(logistic));

    EstimatorSpec dt;
    dt.kind = EstimatorKind::DecisionTree;
    dt.hparams.set("max_features", std::string("auto"));
    validate_spec(dt);
    CHECK(dt.hparams.get_string("max_features", "") == "all");
    dt.hparams.set("max_features", std::string("none"));
    validate_spec(dt);
    CHECK(dt.hparams.get_string("max_features", "") == "all");
}
