#include "ytcc/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ytcc/errors.hpp"
#include "ytcc/hash.hpp"

namespace ytcc {

const std::string& to_string(Scheme scheme) {
    static const std::string df = "df_counts";
    static const std::string tfidf = "tfidf";
    return scheme == Scheme::DfCounts ? df : tfidf;
}

std::optional<Scheme> parse_scheme(const std::string& text) {
    if (text == "df_counts" || text == "df") return Scheme::DfCounts;
    if (text == "tfidf" || text == "tf-idf") return Scheme::Tfidf;
    return std::nullopt;
}

VectorizerConfig VectorizerConfig::defaults(Scheme scheme) {
    VectorizerConfig config;
    config.scheme = scheme;
    config.ngram_max = scheme == Scheme::Tfidf ? 2 : 1;
    return config;
}

std::vector<std::string> extract_terms(const std::vector<std::string>& tokens, int ngram_min,
                                       int ngram_max) {
    std::vector<std::string> terms;
    if (ngram_min <= 1 && ngram_max >= 1) {
        terms.insert(terms.end(), tokens.begin(), tokens.end());
    }
    if (ngram_max >= 2 && tokens.size() >= 2) {
        for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
            terms.push_back(tokens[i] + " " + tokens[i + 1]);
        }
    }
    return terms;
}

Vocabulary fit_vocabulary(const std::vector<TokenizedComment>& train, const VectorizerConfig& config,
                          VocabularyAudit* audit) {
    if (train.empty()) throw SchemaError("cannot fit a vocabulary on an empty corpus");

    std::unordered_map<std::string, int> doc_count;
    std::unordered_map<std::string, std::vector<std::size_t>> supporters;
    for (std::size_t d = 0; d < train.size(); ++d) {
        const auto terms = extract_terms(train[d].tokens, config.ngram_min, config.ngram_max);
        const std::set<std::string> unique(terms.begin(), terms.end());
        for (const auto& t : unique) {
            doc_count[t]++;
            if (audit) supporters[t].push_back(d);
        }
    }

    const double n_docs = static_cast<double>(train.size());
    Vocabulary vocab;
    vocab.config = config;
    vocab.n_docs_fitted = train.size();
    for (const auto& [term, count] : doc_count) {
        if (count > config.min_df_count &&
            static_cast<double>(count) <= config.max_df_fraction * n_docs) {
            vocab.terms.push_back(term);
        }
    }
    if (vocab.terms.empty()) {
        throw SchemaError("all terms were filtered out (min_df_count=" +
                          std::to_string(config.min_df_count) + ", max_df_fraction=" +
                          std::to_string(config.max_df_fraction) + ")");
    }
    std::sort(vocab.terms.begin(), vocab.terms.end());
    vocab.df.resize(static_cast<Index>(vocab.terms.size()));
    for (Index i = 0; i < vocab.size(); ++i) {
        vocab.index.emplace(vocab.terms[i], i);
        vocab.df[i] = static_cast<double>(doc_count[vocab.terms[i]]) / n_docs;
    }
    if (audit) {
        audit->clear();
        for (const auto& term : vocab.terms) (*audit)[term] = supporters[term];
    }
    return vocab;
}

namespace {

std::vector<Triplet> count_triplets(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs) {
    std::vector<Triplet> triplets;
    std::unordered_map<Index, double> row_counts;
    for (std::size_t d = 0; d < docs.size(); ++d) {
        row_counts.clear();
        for (const auto& term :
             extract_terms(docs[d].tokens, vocab.config.ngram_min, vocab.config.ngram_max)) {
            const auto it = vocab.index.find(term);
            if (it != vocab.index.end()) row_counts[it->second] += 1.0;
        }
        for (const auto& [col, count] : row_counts) {
            triplets.emplace_back(static_cast<int>(d), static_cast<int>(col), count);
        }
    }
    return triplets;
}

FeatureMatrix build_matrix(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs,
                           const std::vector<Triplet>& triplets) {
    FeatureMatrix m;
    m.values.resize(static_cast<Index>(docs.size()), vocab.size());
    m.values.setFromTriplets(triplets.begin(), triplets.end());
    m.row_ids.reserve(docs.size());
    for (const auto& doc : docs) m.row_ids.push_back(doc.id);
    return m;
}

}  // namespace

FeatureMatrix transform_counts(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs) {
    return build_matrix(vocab, docs, count_triplets(vocab, docs));
}

ScalerState fit_scaler(const FeatureMatrix& matrix) {
    const Index cols = matrix.cols();
    const Index rows = matrix.rows();
    ScalerState state;
    state.min = DenseVector::Zero(cols);
    state.max = DenseVector::Zero(cols);
    for (Index j = 0; j < cols; ++j) {
        Real lo = std::numeric_limits<Real>::infinity();
        Real hi = -std::numeric_limits<Real>::infinity();
        Index nnz = 0;
        for (SparseMatrix::InnerIterator it(matrix.values, j); it; ++it) {
            lo = std::min(lo, it.value());
            hi = std::max(hi, it.value());
            ++nnz;
        }
        if (nnz < rows) {  // implicit zeros participate
            lo = std::min(lo, 0.0);
            hi = std::max(hi, 0.0);
        }
        if (nnz == 0 && rows == 0) lo = hi = 0.0;
        state.min[j] = lo;
        state.max[j] = hi;
    }
    return state;
}

FeatureMatrix apply_scaler(const ScalerState& state, const FeatureMatrix& matrix) {
    if (state.min.size() != matrix.cols()) {
        throw SchemaError("scaler fitted on " + std::to_string(state.min.size()) +
                          " columns, matrix has " + std::to_string(matrix.cols()));
    }
    const Index rows = matrix.rows();
    std::vector<Triplet> triplets;
    std::vector<bool> stored(static_cast<std::size_t>(rows));
    for (Index j = 0; j < matrix.cols(); ++j) {
        const Real lo = state.min[j];
        const Real hi = state.max[j];
        const Real denom = hi - lo;
        auto scaled = [&](Real x) {
            if (denom <= 0.0) return 0.0;
            return std::clamp((x - lo) / denom, 0.0, 1.0);
        };
        const Real fill = scaled(0.0);  // value of implicit zeros
        if (fill == 0.0) {
            for (SparseMatrix::InnerIterator it(matrix.values, j); it; ++it) {
                const Real v = scaled(it.value());
                if (v != 0.0) triplets.emplace_back(static_cast<int>(it.row()), static_cast<int>(j), v);
            }
        } else {
            // Zeros no longer map to zero: the column densifies.
            std::fill(stored.begin(), stored.end(), false);
            for (SparseMatrix::InnerIterator it(matrix.values, j); it; ++it) {
                stored[static_cast<std::size_t>(it.row())] = true;
                const Real v = scaled(it.value());
                if (v != 0.0) triplets.emplace_back(static_cast<int>(it.row()), static_cast<int>(j), v);
            }
            for (Index r = 0; r < rows; ++r) {
                if (!stored[static_cast<std::size_t>(r)]) {
                    triplets.emplace_back(static_cast<int>(r), static_cast<int>(j), fill);
                }
            }
        }
    }
    FeatureMatrix out;
    out.values.resize(rows, matrix.cols());
    out.values.setFromTriplets(triplets.begin(), triplets.end());
    out.row_ids = matrix.row_ids;
    return out;
}

namespace {

DenseVector idf_weights(const Vocabulary& vocab) {
    const double log_base = std::log(vocab.config.idf_log_base);
    DenseVector idf(vocab.size());
    for (Index i = 0; i < vocab.size(); ++i) {
        idf[i] = std::log(1.0 / vocab.df[i]) / log_base;
    }
    return idf;
}

FeatureMatrix weight_tfidf(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs) {
    const DenseVector idf = idf_weights(vocab);
    std::vector<Triplet> triplets = count_triplets(vocab, docs);
    std::vector<Triplet> weighted;
    weighted.reserve(triplets.size());
    for (const auto& t : triplets) {
        const Real w = t.value() * idf[t.col()];
        if (w != 0.0) weighted.emplace_back(t.row(), t.col(), w);
    }
    return build_matrix(vocab, docs, weighted);
}

}  // namespace

std::pair<Vocabulary, FeatureMatrix> fit_transform_tfidf(const std::vector<TokenizedComment>& train,
                                                         const VectorizerConfig& config) {
    Vocabulary vocab = fit_vocabulary(train, config);
    FeatureMatrix matrix = weight_tfidf(vocab, train);
    return {std::move(vocab), std::move(matrix)};
}

FeatureMatrix transform_tfidf(const Vocabulary& vocab, const std::vector<TokenizedComment>& docs) {
    return weight_tfidf(vocab, docs);
}

// ---------------------------------------------------------- persistence

namespace {

constexpr int kVectorizerFormatVersion = 1;

nlohmann::json settings_to_json(const PipelineSettings& s) {
    return nlohmann::json{
        {"lowercase", s.lowercase},
        {"remove_urls", s.remove_urls},
        {"remove_newlines", s.remove_newlines},
        {"remove_punctuation", s.remove_punctuation},
        {"remove_integers", s.remove_integers},
        {"remove_emojis", s.remove_emojis},
        {"spell_correction", s.spell_correction},
        {"lemmatize", s.lemmatize},
        {"remove_stopwords", s.remove_stopwords},
        {"lemmatize_before_stopwords", s.lemmatize_before_stopwords},
        {"resource_fingerprint", s.resource_fingerprint},
    };
}

PipelineSettings settings_from_json(const nlohmann::json& j) {
    PipelineSettings s;
    s.lowercase = j.at("lowercase").get<bool>();
    s.remove_urls = j.at("remove_urls").get<bool>();
    s.remove_newlines = j.at("remove_newlines").get<bool>();
    s.remove_punctuation = j.at("remove_punctuation").get<bool>();
    s.remove_integers = j.at("remove_integers").get<bool>();
    s.remove_emojis = j.at("remove_emojis").get<bool>();
    s.spell_correction = j.at("spell_correction").get<bool>();
    s.lemmatize = j.at("lemmatize").get<bool>();
    s.remove_stopwords = j.at("remove_stopwords").get<bool>();
    s.lemmatize_before_stopwords = j.at("lemmatize_before_stopwords").get<bool>();
    s.resource_fingerprint = j.at("resource_fingerprint").get<std::string>();
    return s;
}

nlohmann::json vectorizer_to_json(const VectorizerModel& model) {
    const Vocabulary& vocab = model.vocab;
    nlohmann::json j;
    j["format_version"] = kVectorizerFormatVersion;
    j["type"] = "ytcc.vectorizer";
    j["config"] = {
        {"scheme", to_string(vocab.config.scheme)},
        {"ngram_min", vocab.config.ngram_min},
        {"ngram_max", vocab.config.ngram_max},
        {"min_df_count", vocab.config.min_df_count},
        {"max_df_fraction", vocab.config.max_df_fraction},
        {"idf_log_base", vocab.config.idf_log_base},
    };
    j["n_docs_fitted"] = vocab.n_docs_fitted;
    j["terms"] = vocab.terms;
    std::vector<double> df(vocab.df.data(), vocab.df.data() + vocab.df.size());
    j["df"] = df;
    if (model.scaler) {
        std::vector<double> mins(model.scaler->min.data(),
                                 model.scaler->min.data() + model.scaler->min.size());
        std::vector<double> maxs(model.scaler->max.data(),
                                 model.scaler->max.data() + model.scaler->max.size());
        j["scaler"] = {{"min", mins}, {"max", maxs}};
    } else {
        j["scaler"] = nullptr;
    }
    j["pipeline"] = settings_to_json(model.pipeline);
    return j;
}

}  // namespace

PipelineSettings settings_of(const PipelineConfig& config) {
    PipelineSettings s;
    s.lowercase = config.lowercase;
    s.remove_urls = config.remove_urls;
    s.remove_newlines = config.remove_newlines;
    s.remove_punctuation = config.remove_punctuation;
    s.remove_integers = config.remove_integers;
    s.remove_emojis = config.remove_emojis;
    s.spell_correction = config.spell_correction;
    s.lemmatize = config.lemmatize;
    s.remove_stopwords = config.remove_stopwords;
    s.lemmatize_before_stopwords = config.lemmatize_before_stopwords;
    s.resource_fingerprint = config.resource_fingerprint;
    return s;
}

void apply_settings(const PipelineSettings& settings, PipelineConfig& config) {
    config.lowercase = settings.lowercase;
    config.remove_urls = settings.remove_urls;
    config.remove_newlines = settings.remove_newlines;
    config.remove_punctuation = settings.remove_punctuation;
    config.remove_integers = settings.remove_integers;
    config.remove_emojis = settings.remove_emojis;
    config.spell_correction = settings.spell_correction;
    config.lemmatize = settings.lemmatize;
    config.remove_stopwords = settings.remove_stopwords;
    config.lemmatize_before_stopwords = settings.lemmatize_before_stopwords;
}

void save_vectorizer(const VectorizerModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << vectorizer_to_json(model).dump(2) << '\n';
    if (!out) throw IoError("write failed: " + path);
}

VectorizerModel load_vectorizer(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.contains("format_version") || j["format_version"].get<int>() != kVectorizerFormatVersion) {
        throw VersionError(path + ": unsupported vectorizer format version");
    }
    VectorizerModel model;
    const auto& jc = j.at("config");
    const auto scheme = parse_scheme(jc.at("scheme").get<std::string>());
    if (!scheme) throw ParseError(path + ": unknown scheme");
    model.vocab.config.scheme = *scheme;
    model.vocab.config.ngram_min = jc.at("ngram_min").get<int>();
    model.vocab.config.ngram_max = jc.at("ngram_max").get<int>();
    model.vocab.config.min_df_count = jc.at("min_df_count").get<int>();
    model.vocab.config.max_df_fraction = jc.at("max_df_fraction").get<double>();
    model.vocab.config.idf_log_base = jc.at("idf_log_base").get<double>();
    model.vocab.n_docs_fitted = j.at("n_docs_fitted").get<std::size_t>();
    model.vocab.terms = j.at("terms").get<std::vector<std::string>>();
    const auto df = j.at("df").get<std::vector<double>>();
    if (df.size() != model.vocab.terms.size()) {
        throw ParseError(path + ": df/terms length mismatch");
    }
    model.vocab.df = Eigen::Map<const DenseVector>(df.data(), static_cast<Index>(df.size()));
    for (Index i = 0; i < model.vocab.size(); ++i) {
        model.vocab.index.emplace(model.vocab.terms[static_cast<std::size_t>(i)], i);
    }
    if (!j.at("scaler").is_null()) {
        const auto mins = j.at("scaler").at("min").get<std::vector<double>>();
        const auto maxs = j.at("scaler").at("max").get<std::vector<double>>();
        if (mins.size() != model.vocab.terms.size() || maxs.size() != mins.size()) {
            throw ParseError(path + ": scaler length mismatch");
        }
        ScalerState scaler;
        scaler.min = Eigen::Map<const DenseVector>(mins.data(), static_cast<Index>(mins.size()));
        scaler.max = Eigen::Map<const DenseVector>(maxs.data(), static_cast<Index>(maxs.size()));
        model.scaler = std::move(scaler);
    }
    model.pipeline = settings_from_json(j.at("pipeline"));
    return model;
}

std::string vectorizer_fingerprint(const VectorizerModel& model) {
    return to_hex(fnv1a64(vectorizer_to_json(model).dump()));
}

FeatureMatrix vectorize(const VectorizerModel& model, const std::vector<TokenizedComment>& docs) {
    if (model.vocab.config.scheme == Scheme::Tfidf) {
        return transform_tfidf(model.vocab, docs);
    }
    FeatureMatrix counts = transform_counts(model.vocab, docs);
    return model.scaler ? apply_scaler(*model.scaler, counts) : counts;
}

}  // namespace ytcc
