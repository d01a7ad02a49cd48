#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ytcc {

struct Comment;

/// Frequency-dictionary spell corrector. Out-of-dictionary tokens are
/// replaced by the highest-frequency dictionary word within
/// max_edit_distance (Levenshtein); ties prefer smaller distance, then
/// lexicographic order. Tokens with no candidate pass through unchanged.
class SpellModel {
public:
    SpellModel(std::vector<std::pair<std::string, std::uint64_t>> entries, int max_edit_distance = 2);

    /// Reads `word<TAB>frequency` lines. Keys are lowercased.
    static SpellModel from_file(const std::string& path, int max_edit_distance = 2);

    bool contains(const std::string& word) const;
    std::string correct(const std::string& token) const;
    int max_edit_distance() const { return max_edit_distance_; }
    std::size_t size() const { return words_.size(); }

private:
    struct Entry {
        std::string word;
        std::uint64_t frequency;
    };
    std::vector<Entry> words_;
    std::unordered_map<std::string, std::uint32_t> word_index_;
    // SymSpell-style delete neighbourhood: every ≤max_edit_distance-deletion
    // of a dictionary word points back at its sources.
    std::unordered_map<std::string, std::vector<std::uint32_t>> delete_index_;
    int max_edit_distance_;
};

/// Levenshtein distance, capped: returns limit+1 once the true distance
/// exceeds `limit`.
int bounded_edit_distance(const std::string& a, const std::string& b, int limit);

/// Table-plus-suffix-rule lemmatizer. Lookup order: explicit table, then
/// the first applicable suffix rule, then identity. A rule applies when
/// the word ends with its suffix and either the rule is an identity guard
/// (replacement == suffix) or the remaining stem keeps at least two
/// characters; the guards keep lemmatization a fixpoint.
class LemmaModel {
public:
    LemmaModel(std::unordered_map<std::string, std::string> table,
               std::vector<std::pair<std::string, std::string>> suffix_rules);

    /// `form<TAB>lemma` and ordered `suffix<TAB>replacement` files.
    static LemmaModel from_files(const std::string& table_path, const std::string& rules_path);

    std::string lemma(const std::string& word) const;

private:
    std::unordered_map<std::string, std::string> table_;
    std::vector<std::pair<std::string, std::string>> suffix_rules_;
};

struct TokenizedComment {
    std::string id;
    std::vector<std::string> tokens;
};

/// Cleaning pipeline configuration. Step flags mirror the fixed step
/// order: lowercase, URLs, newlines, punctuation, integers, emojis,
/// whitespace collapse, spell correction, lemmatization, stopwords.
struct PipelineConfig {
    bool lowercase = true;
    bool remove_urls = true;
    bool remove_newlines = true;
    bool remove_punctuation = true;
    bool remove_integers = true;
    bool remove_emojis = true;
    bool spell_correction = true;
    bool lemmatize = true;
    bool remove_stopwords = true;
    // Relative order of the last two steps is configurable; default
    // lemmatizes first.
    bool lemmatize_before_stopwords = true;

    std::unordered_set<std::string> stopwords;
    std::unordered_set<std::string> stopword_exceptions;
    std::shared_ptr<const SpellModel> speller;
    std::shared_ptr<const LemmaModel> lemmatizer;

    /// Content hash of the loaded resource files; folded into vectorizer
    /// fingerprints so models refuse mismatched preprocessing.
    std::string resource_fingerprint;
};

/// Serializable echo of a PipelineConfig: the step toggles plus the
/// resource fingerprint, without the loaded models.
struct PipelineSettings {
    bool lowercase = true;
    bool remove_urls = true;
    bool remove_newlines = true;
    bool remove_punctuation = true;
    bool remove_integers = true;
    bool remove_emojis = true;
    bool spell_correction = true;
    bool lemmatize = true;
    bool remove_stopwords = true;
    bool lemmatize_before_stopwords = true;
    std::string resource_fingerprint;

    bool operator==(const PipelineSettings&) const = default;
};

/// Exception words missing from the stopword list (ignored, but surfaced
/// to the user as warnings).
std::vector<std::string> config_warnings(const PipelineConfig& config);

/// Step toggle access by CLI name ("spell_correction", ...). Returns
/// false for unknown names.
bool disable_step(PipelineConfig& config, const std::string& step_name);
const std::vector<std::string>& step_names();

/// Character-level cleanup: lowercases, strips URL spans, newlines,
/// punctuation (to spaces), ASCII digit runs, emoji code points, then
/// collapses whitespace and trims. Total on any byte string; invalid
/// UTF-8 bytes pass through untouched.
std::string normalize(const std::string& text, const PipelineConfig& config);

/// Whitespace split of normalized text.
std::vector<std::string> tokenize(const std::string& normalized);

std::vector<std::string> correct_spelling(const std::vector<std::string>& tokens, const SpellModel& model);
std::vector<std::string> lemmatize(const std::vector<std::string>& tokens, const LemmaModel& model);
std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens, const PipelineConfig& config);

TokenizedComment run_pipeline(const Comment& comment, const PipelineConfig& config);

/// Batch helper with per-call spell-correction memoisation.
std::vector<TokenizedComment> run_pipeline(const std::vector<Comment>& comments,
                                           const PipelineConfig& config);

}  // namespace ytcc
