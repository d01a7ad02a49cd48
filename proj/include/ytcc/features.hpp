#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ytcc/preprocess.hpp"
#include "ytcc/types.hpp"

namespace ytcc {

enum class Scheme { DfCounts, Tfidf };

const std::string& to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(const std::string& text);

struct VectorizerConfig {
    Scheme scheme = Scheme::DfCounts;
    int ngram_min = 1;
    int ngram_max = 1;  // 2 for the tf-idf scheme
    // Document-count filter is strict: a term is kept only when its
    // document count exceeds min_df_count.
    int min_df_count = 5;
    double max_df_fraction = 0.5;
    double idf_log_base = 2.718281828459045;  // natural log

    static VectorizerConfig defaults(Scheme scheme);
};

struct Vocabulary {
    std::vector<std::string> terms;  // lexicographic; bigrams "a b"
    std::unordered_map<std::string, Index> index;
    DenseVector df;  // per-term document frequency in (0, 1]
    std::size_t n_docs_fitted = 0;
    VectorizerConfig config;

    Index size() const { return static_cast<Index>(terms.size()); }
};

struct FeatureMatrix {
    SparseMatrix values;  // rows = documents, cols = vocabulary
    std::vector<std::string> row_ids;

    Index rows() const { return values.rows(); }
    Index cols() const { return values.cols(); }
};

/// Per-column (min, max) learned on training data.
struct ScalerState {
    DenseVector min;
    DenseVector max;
};

/// Unigrams (and adjacent-pair bigrams when ngram_max >= 2) of a token
/// sequence, with multiplicity, in document order.
std::vector<std::string> extract_terms(const std::vector<std::string>& tokens, int ngram_min,
                                       int ngram_max);

/// Retained-term supporting documents (positions into the fitted doc
/// list), recorded when an audit pointer is passed to fit_vocabulary.
/// Used to verify that no validation/test document leaks into a fit.
using VocabularyAudit = std::unordered_map<std::string, std::vector<std::size_t>>;

/// Document-frequency vocabulary fit: df = n/N with per-document term
/// multiplicity ignored; keeps terms with document count > min_df_count
/// and df <= max_df_fraction; term order lexicographic.
Vocabulary fit_vocabulary(const std::vector<TokenizedComment>& train, const VectorizerConfig& config,
                          VocabularyAudit* audit = nullptr);

/// Raw in-vocabulary term counts per document; OOV tokens ignored.
FeatureMatrix transform_counts(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs);

ScalerState fit_scaler(const FeatureMatrix& matrix);

/// scaled = (x - min) / (max - min) per column, clamped to [0, 1];
/// degenerate columns (max == min) map to 0.
FeatureMatrix apply_scaler(const ScalerState& state, const FeatureMatrix& matrix);

/// tf-idf weights: tf * log(1/df) in config.idf_log_base, df fitted as in
/// fit_vocabulary over the ngram-extended vocabulary.
std::pair<Vocabulary, FeatureMatrix> fit_transform_tfidf(const std::vector<TokenizedComment>& train,
                                                         const VectorizerConfig& config);

/// Applies training-time df weights to new documents (df never
/// recomputed); OOV terms ignored.
FeatureMatrix transform_tfidf(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs);

/// Fitted vectorizer bundle as persisted next to a model: vocabulary,
/// optional scaler (df scheme) and the preprocessing echo.
struct VectorizerModel {
    Vocabulary vocab;
    std::optional<ScalerState> scaler;
    PipelineSettings pipeline;
};

/// Serializable echo of PipelineConfig (toggles + resource hash).
PipelineSettings settings_of(const PipelineConfig& config);
void apply_settings(const PipelineSettings& settings, PipelineConfig& config);

void save_vectorizer(const VectorizerModel& model, const std::string& path);
VectorizerModel load_vectorizer(const std::string& path);

/// Stable content hash of the fitted vectorizer; stored in model files
/// and checked before prediction.
std::string vectorizer_fingerprint(const VectorizerModel& model);

/// End-to-end convenience: tokenized docs -> feature matrix under the
/// fitted vectorizer (applies the scaler for the df scheme).
FeatureMatrix vectorize(const VectorizerModel& model, const std::vector<TokenizedComment>& docs);

}  // namespace ytcc
