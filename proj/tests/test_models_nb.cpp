#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "ytcc/errors.hpp"
#include "ytcc/models.hpp"
#include "ytcc/rng.hpp"

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

EstimatorSpec nb_spec(double alpha, bool fit_prior) {
    EstimatorSpec spec;
    spec.kind = EstimatorKind::MultinomialNb;
    spec.hparams.set("alpha", alpha);
    spec.hparams.set("fit_prior", fit_prior);
    return spec;
}

std::map<int, double> sparse_row(const FeatureMatrix& m, Index row) {
    std::map<int, double> out;
    for (Index j = 0; j < m.cols(); ++j) {
        const double v = m.values.coeff(row, j);
        if (v != 0.0) out[static_cast<int>(j)] = v;
    }
    return out;
}

}  // namespace

TEST_CASE("naive bayes matches the hand-computable closed form on a 4-document corpus") {
    // Two classes, three features, alpha=1.
    const FeatureMatrix X = matrix_from_rows({
        {2, 1, 0},
        {1, 0, 0},
        {0, 1, 3},
        {0, 0, 1},
    });
    const std::vector<CommentClass> y = {CommentClass::Positive, CommentClass::Positive,
                                         CommentClass::Negative, CommentClass::Negative};
    const TrainedModel model = train(nb_spec(1.0, true), X, y);
    const auto& params = std::get<NaiveBayesParams>(model.params);

    // class positive: counts (3,1,0), total 4 -> logp = log((c+1)/(4+3))
    CHECK(params.log_prior[0] == doctest::Approx(std::log(0.5)).epsilon(1e-12));
    CHECK(params.log_likelihood(0, 0) == doctest::Approx(std::log(4.0 / 7.0)).epsilon(1e-12));
    CHECK(params.log_likelihood(0, 1) == doctest::Approx(std::log(2.0 / 7.0)).epsilon(1e-12));
    CHECK(params.log_likelihood(0, 2) == doctest::Approx(std::log(1.0 / 7.0)).epsilon(1e-12));
    // class negative: counts (0,1,4), total 5 -> logp = log((c+1)/(5+3))
    CHECK(params.log_likelihood(1, 0) == doctest::Approx(std::log(1.0 / 8.0)).epsilon(1e-12));
    CHECK(params.log_likelihood(1, 1) == doctest::Approx(std::log(2.0 / 8.0)).epsilon(1e-12));
    CHECK(params.log_likelihood(1, 2) == doctest::Approx(std::log(5.0 / 8.0)).epsilon(1e-12));
}

TEST_CASE("naive bayes equals the brute-force oracle on random small corpora") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n_docs = 3 + static_cast<int>(rng.below(8));  // <= 10 docs
        const int n_features = 2 + static_cast<int>(rng.below(6));
        std::vector<std::vector<double>> rows;
        std::vector<CommentClass> y;
        std::vector<std::map<int, double>> oracle_docs;
        std::vector<int> oracle_labels;
        for (int d = 0; d < n_docs; ++d) {
            std::vector<double> row(static_cast<std::size_t>(n_features), 0.0);
            std::map<int, double> odoc;
            for (int f = 0; f < n_features; ++f) {
                const double v = static_cast<double>(rng.below(4));
                row[static_cast<std::size_t>(f)] = v;
                if (v != 0.0) odoc[f] = v;
            }
            const int label = d % 2 == 0 ? 0 : 1;  // guarantee both classes
            rows.push_back(std::move(row));
            y.push_back(static_cast<CommentClass>(label));
            oracle_docs.push_back(std::move(odoc));
            oracle_labels.push_back(label);
        }
        const double alpha = trial % 3 == 0 ? 0.5 : 1.0;
        const bool fit_prior = trial % 2 == 0;
        const FeatureMatrix X = matrix_from_rows(rows);
        const TrainedModel model = train(nb_spec(alpha, fit_prior), X, y);
        const auto oracle_model =
            oracle::NaiveBayesOracle::fit(oracle_docs, oracle_labels, n_features, alpha, fit_prior);

        const DenseMatrix scores = predict_scores(model, X);
        for (Index d = 0; d < X.rows(); ++d) {
            const auto doc = sparse_row(X, d);
            for (std::size_t k = 0; k < model.classes.size(); ++k) {
                const int c = static_cast<int>(model.classes[k]);
                const double expected = oracle_model.log_joint(doc, c);
                CHECK(scores(d, static_cast<Index>(k)) ==
                      doctest::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("zero vector predicts the empirical-majority class under fit_prior") {
    const FeatureMatrix X = matrix_from_rows({
        {1, 0}, {2, 0}, {3, 0}, {0, 1},
    });
    const std::vector<CommentClass> y = {CommentClass::Imperative, CommentClass::Imperative,
                                         CommentClass::Imperative, CommentClass::Corrective};
    const TrainedModel model = train(nb_spec(1.0, true), X, y);
    const FeatureMatrix zero = matrix_from_rows({{0, 0}});
    CHECK(predict(model, zero)[0] == CommentClass::Imperative);
}

TEST_CASE("uniform and empirical priors differ by a per-class constant") {
    const FeatureMatrix X = matrix_from_rows({
        {2, 1, 0}, {1, 0, 1}, {0, 3, 1}, {1, 1, 1}, {0, 0, 2},
    });
    const std::vector<CommentClass> y = {CommentClass::Positive, CommentClass::Positive,
                                         CommentClass::Positive, CommentClass::Negative,
                                         CommentClass::Negative};
    const TrainedModel with_prior = train(nb_spec(1.0, true), X, y);
    const TrainedModel uniform = train(nb_spec(1.0, false), X, y);
    const DenseMatrix a = predict_scores(with_prior, X);
    const DenseMatrix b = predict_scores(uniform, X);
    for (Index k = 0; k < a.cols(); ++k) {
        const double delta = a(0, k) - b(0, k);
        for (Index r = 1; r < a.rows(); ++r) {
            CHECK(a(r, k) - b(r, k) == doctest::Approx(delta).epsilon(1e-9));
        }
    }
}

TEST_CASE("adding a constant to all log scores never changes predict") {
    const FeatureMatrix X = matrix_from_rows({
        {1, 2, 0}, {0, 1, 1}, {2, 0, 1}, {1, 1, 1},
    });
    const std::vector<CommentClass> y = {CommentClass::Positive, CommentClass::Negative,
                                         CommentClass::Positive, CommentClass::Negative};
    const TrainedModel model = train(nb_spec(0.5, true), X, y);
    const DenseMatrix scores = predict_scores(model, X);
    const auto labels = predict(model, X);
    for (Index r = 0; r < scores.rows(); ++r) {
        Index best = 0;
        for (Index k = 1; k < scores.cols(); ++k) {
            // shifting every class score by the same constant keeps argmax
            if (scores(r, k) + 42.0 > scores(r, best) + 42.0) best = k;
        }
        CHECK(model.classes[static_cast<std::size_t>(best)] == labels[static_cast<std::size_t>(r)]);
    }
}

TEST_CASE("alpha zero is accepted and behaves like a vanishing smoother") {
    const FeatureMatrix X = matrix_from_rows({{2, 0}, {0, 3}});
    const std::vector<CommentClass> y = {CommentClass::Positive, CommentClass::Negative};
    const TrainedModel model = train(nb_spec(0.0, true), X, y);
    const auto& params = std::get<NaiveBayesParams>(model.params);
    for (Index k = 0; k < params.log_likelihood.rows(); ++k) {
        for (Index j = 0; j < params.log_likelihood.cols(); ++j) {
            CHECK(std::isfinite(params.log_likelihood(k, j)));
        }
    }
    CHECK(predict(model, X)[0] == CommentClass::Positive);
    CHECK(predict(model, X)[1] == CommentClass::Negative);
}

TEST_CASE("training errors are reported") {
    const FeatureMatrix X = matrix_from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(train(nb_spec(1.0, true), X,
                          {CommentClass::Positive, CommentClass::Positive}),
                    SchemaError);  // single class
    CHECK_THROWS_AS(train(nb_spec(1.0, true), X, {CommentClass::Positive}), SchemaError);
    CHECK_THROWS_AS(train(nb_spec(-1.0, true), X,
                          {CommentClass::Positive, CommentClass::Negative}),
                    SchemaError);  // bad alpha
    const FeatureMatrix negative = matrix_from_rows({{-1, 0}, {0, 1}});
    CHECK_THROWS_AS(train(nb_spec(1.0, true), negative,
                          {CommentClass::Positive, CommentClass::Negative}),
                    SchemaError);
    const TrainedModel model =
        train(nb_spec(1.0, true), X, {CommentClass::Positive, CommentClass::Negative});
    const FeatureMatrix wrong_width = matrix_from_rows({{1, 2, 3}});
    CHECK_THROWS_AS(predict(model, wrong_width), SchemaError);
}
