#include "ytcc/preprocess.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "ytcc/corpus.hpp"
#include "ytcc/errors.hpp"

namespace ytcc {
namespace {

// ---------------------------------------------------------------- utf-8

struct Codepoint {
    char32_t value;
    int length;  // bytes consumed; 1 on invalid input (byte passes through)
    bool valid;
};

Codepoint decode_utf8(const std::string& s, std::size_t i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) return {b0, 1, true};
    auto cont = [&](std::size_t k) {
        return k < s.size() && (byte(k) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
        const char32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
        return Codepoint{cp, 2, cp >= 0x80};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
        const char32_t cp = ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) | (byte(i + 2) & 0x3Fu);
        return Codepoint{cp, 3, cp >= 0x800};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
        const char32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                            ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
        return Codepoint{cp, 4, cp >= 0x10000 && cp <= 0x10FFFF};
    }
    return {b0, 1, false};
}

bool is_emoji_codepoint(char32_t cp) {
    return (cp >= 0x1F1E6 && cp <= 0x1F1FF) ||  // regional indicators
           (cp >= 0x1F300 && cp <= 0x1FAFF) ||
           (cp >= 0x2600 && cp <= 0x27BF) ||
           cp == 0xFE0F || cp == 0x200D;
}

bool is_ascii_punct(char32_t cp) {
    return cp < 128 && std::ispunct(static_cast<int>(cp));
}

bool is_punct_codepoint(char32_t cp) {
    if (is_ascii_punct(cp)) return true;
    switch (cp) {
        case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x201E:
        case 0x2013: case 0x2014: case 0x2022: case 0x2026:
        case 0x00A1: case 0x00AB: case 0x00B4: case 0x00B7: case 0x00BB: case 0x00BF:
            return true;
        default:
            return false;
    }
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// ------------------------------------------------------------- url pass

bool is_space_byte(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

char lower_ascii(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool matches_at_ci(const std::string& s, std::size_t pos, const char* pattern) {
    for (std::size_t k = 0; pattern[k]; ++k) {
        if (pos + k >= s.size() || lower_ascii(s[pos + k]) != pattern[k]) return false;
    }
    return true;
}

bool is_scheme_char(char c) {
    const char l = lower_ascii(c);
    return (l >= 'a' && l <= 'z') || (l >= '0' && l <= '9') || l == '+' || l == '.' || l == '-';
}

// Removes, within each whitespace-delimited span, everything from the
// start of a scheme ("x://...") or a "www."-prefixed host to the end of
// the span.
std::string strip_urls(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space_byte(text[i])) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        std::size_t end = i;
        while (end < text.size() && !is_space_byte(text[end])) ++end;

        std::size_t cut = end;
        for (std::size_t k = i; k + 2 < end; ++k) {
            if (text[k] == ':' && text[k + 1] == '/' && text[k + 2] == '/') {
                std::size_t start = k;
                while (start > i && is_scheme_char(text[start - 1])) --start;
                cut = start;
                break;
            }
        }
        if (cut == end) {
            for (std::size_t k = i; k < end; ++k) {
                const bool boundary = k == i || !std::isalnum(static_cast<unsigned char>(text[k - 1]));
                if (boundary && matches_at_ci(text, k, "www.")) {
                    cut = k;
                    break;
                }
            }
        }
        out.append(text, i, cut - i);
        if (cut < end) out.push_back(' ');
        i = end;
    }
    return out;
}

std::string trim_and_collapse(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space_byte(c)) {
            pending_space = true;
        } else {
            if (pending_space && !out.empty()) out.push_back(' ');
            out.push_back(c);
            pending_space = false;
        }
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> read_tsv_pairs(const std::string& path,
                                                                bool allow_empty_second) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos && !allow_empty_second) {
            throw ParseError(path + " line " + std::to_string(line_number) + ": expected TAB separator");
        }
        // A line without a TAB is accepted as an empty second field when
        // allowed; editors tend to strip the trailing tab those lines carry.
        std::string first = tab == std::string::npos ? line : line.substr(0, tab);
        std::string second = tab == std::string::npos ? std::string() : line.substr(tab + 1);
        if (first.empty() || (second.empty() && !allow_empty_second)) {
            throw ParseError(path + " line " + std::to_string(line_number) + ": empty field");
        }
        pairs.emplace_back(std::move(first), std::move(second));
    }
    return pairs;
}

std::string lowercase_ascii(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), lower_ascii);
    return s;
}

void collect_deletes(const std::string& word, int depth, std::unordered_set<std::string>& out) {
    if (depth == 0) return;
    for (std::size_t i = 0; i < word.size(); ++i) {
        std::string shorter = word;
        shorter.erase(i, 1);
        if (out.insert(shorter).second) collect_deletes(shorter, depth - 1, out);
    }
}

}  // namespace

// ------------------------------------------------------------ SpellModel

int bounded_edit_distance(const std::string& a, const std::string& b, int limit) {
    const int la = static_cast<int>(a.size());
    const int lb = static_cast<int>(b.size());
    if (std::abs(la - lb) > limit) return limit + 1;
    std::vector<int> prev(lb + 1), cur(lb + 1);
    for (int j = 0; j <= lb; ++j) prev[j] = j;
    for (int i = 1; i <= la; ++i) {
        cur[0] = i;
        int row_min = cur[0];
        for (int j = 1; j <= lb; ++j) {
            const int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
            row_min = std::min(row_min, cur[j]);
        }
        if (row_min > limit) return limit + 1;
        std::swap(prev, cur);
    }
    return std::min(prev[lb], limit + 1);
}

SpellModel::SpellModel(std::vector<std::pair<std::string, std::uint64_t>> entries, int max_edit_distance)
    : max_edit_distance_(max_edit_distance) {
    if (max_edit_distance < 0) throw SchemaError("max_edit_distance must be non-negative");
    words_.reserve(entries.size());
    for (auto& [word, freq] : entries) {
        std::string key = lowercase_ascii(std::move(word));
        auto [it, inserted] = word_index_.try_emplace(key, static_cast<std::uint32_t>(words_.size()));
        if (inserted) {
            words_.push_back({std::move(key), freq});
        } else {
            words_[it->second].frequency = std::max(words_[it->second].frequency, freq);
        }
    }
    for (std::uint32_t idx = 0; idx < words_.size(); ++idx) {
        std::unordered_set<std::string> deletes;
        deletes.insert(words_[idx].word);
        collect_deletes(words_[idx].word, max_edit_distance_, deletes);
        for (const auto& d : deletes) delete_index_[d].push_back(idx);
    }
}

SpellModel SpellModel::from_file(const std::string& path, int max_edit_distance) {
    std::vector<std::pair<std::string, std::uint64_t>> entries;
    for (auto& [word, freq_text] : read_tsv_pairs(path, /*allow_empty_second=*/false)) {
        std::uint64_t freq = 0;
        try {
            freq = std::stoull(freq_text);
        } catch (const std::exception&) {
            throw ParseError(path + ": bad frequency for \"" + word + "\"");
        }
        entries.emplace_back(std::move(word), freq);
    }
    return SpellModel(std::move(entries), max_edit_distance);
}

bool SpellModel::contains(const std::string& word) const {
    return word_index_.count(word) != 0;
}

std::string SpellModel::correct(const std::string& token) const {
    if (token.empty() || contains(token)) return token;

    std::unordered_set<std::string> probes;
    probes.insert(token);
    collect_deletes(token, max_edit_distance_, probes);

    std::unordered_set<std::uint32_t> candidates;
    for (const auto& probe : probes) {
        const auto it = delete_index_.find(probe);
        if (it == delete_index_.end()) continue;
        candidates.insert(it->second.begin(), it->second.end());
    }

    const Entry* best = nullptr;
    int best_distance = max_edit_distance_ + 1;
    for (std::uint32_t idx : candidates) {
        const Entry& entry = words_[idx];
        const int d = bounded_edit_distance(token, entry.word, max_edit_distance_);
        if (d > max_edit_distance_) continue;
        if (best == nullptr || entry.frequency > best->frequency ||
            (entry.frequency == best->frequency &&
             (d < best_distance || (d == best_distance && entry.word < best->word)))) {
            best = &entry;
            best_distance = d;
        }
    }
    return best ? best->word : token;
}

// ------------------------------------------------------------ LemmaModel

LemmaModel::LemmaModel(std::unordered_map<std::string, std::string> table,
                       std::vector<std::pair<std::string, std::string>> suffix_rules)
    : table_(std::move(table)), suffix_rules_(std::move(suffix_rules)) {}

LemmaModel LemmaModel::from_files(const std::string& table_path, const std::string& rules_path) {
    std::unordered_map<std::string, std::string> table;
    for (auto& [form, lemma] : read_tsv_pairs(table_path, /*allow_empty_second=*/false)) {
        table[lowercase_ascii(std::move(form))] = lowercase_ascii(std::move(lemma));
    }
    std::vector<std::pair<std::string, std::string>> rules =
        read_tsv_pairs(rules_path, /*allow_empty_second=*/true);
    return LemmaModel(std::move(table), std::move(rules));
}

std::string LemmaModel::lemma(const std::string& word) const {
    const auto hit = table_.find(word);
    if (hit != table_.end()) return hit->second;
    for (const auto& [suffix, replacement] : suffix_rules_) {
        if (word.size() < suffix.size()) continue;
        if (word.compare(word.size() - suffix.size(), suffix.size(), suffix) != 0) continue;
        if (replacement == suffix) return word;  // identity guard
        if (word.size() - suffix.size() < 2) continue;
        return word.substr(0, word.size() - suffix.size()) + replacement;
    }
    return word;
}

// --------------------------------------------------------------- config

std::vector<std::string> config_warnings(const PipelineConfig& config) {
    std::vector<std::string> warnings;
    std::vector<std::string> missing;
    for (const auto& word : config.stopword_exceptions) {
        if (!config.stopwords.count(word)) missing.push_back(word);
    }
    std::sort(missing.begin(), missing.end());
    for (const auto& word : missing) {
        warnings.push_back("stopword exception \"" + word + "\" is not in the stopword list; ignored");
    }
    return warnings;
}

const std::vector<std::string>& step_names() {
    static const std::vector<std::string> names = {
        "lowercase",       "remove_urls",    "remove_newlines",
        "remove_punctuation", "remove_integers", "remove_emojis",
        "spell_correction", "lemmatize",     "remove_stopwords",
    };
    return names;
}

bool disable_step(PipelineConfig& config, const std::string& step_name) {
    if (step_name == "lowercase") config.lowercase = false;
    else if (step_name == "remove_urls") config.remove_urls = false;
    else if (step_name == "remove_newlines") config.remove_newlines = false;
    else if (step_name == "remove_punctuation") config.remove_punctuation = false;
    else if (step_name == "remove_integers") config.remove_integers = false;
    else if (step_name == "remove_emojis") config.remove_emojis = false;
    else if (step_name == "spell_correction") config.spell_correction = false;
    else if (step_name == "lemmatize") config.lemmatize = false;
    else if (step_name == "remove_stopwords") config.remove_stopwords = false;
    else return false;
    return true;
}

// ----------------------------------------------------------------- ops

std::string normalize(const std::string& text, const PipelineConfig& config) {
    std::string s = text;
    if (config.lowercase) s = lowercase_ascii(std::move(s));
    if (config.remove_urls) s = strip_urls(s);

    std::string filtered;
    filtered.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const Codepoint cp = decode_utf8(s, i);
        if (!cp.valid) {
            filtered.push_back(s[i]);
            ++i;
            continue;
        }
        if (config.remove_newlines && (cp.value == '\n' || cp.value == '\r')) {
            filtered.push_back(' ');
        } else if (config.remove_punctuation && is_punct_codepoint(cp.value)) {
            filtered.push_back(' ');
        } else if (config.remove_integers && cp.value >= '0' && cp.value <= '9') {
            // digit runs vanish without splitting the surrounding token
        } else if (config.remove_emojis && is_emoji_codepoint(cp.value)) {
            filtered.push_back(' ');
        } else {
            encode_utf8(cp.value, filtered);
        }
        i += cp.length;
    }
    return trim_and_collapse(filtered);
}

std::vector<std::string> tokenize(const std::string& normalized) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < normalized.size()) {
        while (i < normalized.size() && is_space_byte(normalized[i])) ++i;
        std::size_t start = i;
        while (i < normalized.size() && !is_space_byte(normalized[i])) ++i;
        if (i > start) tokens.push_back(normalized.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> correct_spelling(const std::vector<std::string>& tokens, const SpellModel& model) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) out.push_back(model.correct(token));
    return out;
}

std::vector<std::string> lemmatize(const std::vector<std::string>& tokens, const LemmaModel& model) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) out.push_back(model.lemma(token));
    return out;
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const PipelineConfig& config) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (config.stopwords.count(token) && !config.stopword_exceptions.count(token)) continue;
        out.push_back(token);
    }
    return out;
}

namespace {

std::vector<std::string> run_token_steps(std::vector<std::string> tokens, const PipelineConfig& config,
                                         std::unordered_map<std::string, std::string>* spell_cache) {
    if (config.spell_correction && config.speller) {
        for (auto& token : tokens) {
            if (spell_cache) {
                auto it = spell_cache->find(token);
                if (it == spell_cache->end()) {
                    it = spell_cache->emplace(token, config.speller->correct(token)).first;
                }
                token = it->second;
            } else {
                token = config.speller->correct(token);
            }
        }
    }
    auto apply_lemma = [&](std::vector<std::string>& t) {
        if (config.lemmatize && config.lemmatizer) t = lemmatize(t, *config.lemmatizer);
    };
    auto apply_stop = [&](std::vector<std::string>& t) {
        if (config.remove_stopwords) t = remove_stopwords(t, config);
    };
    if (config.lemmatize_before_stopwords) {
        apply_lemma(tokens);
        apply_stop(tokens);
    } else {
        apply_stop(tokens);
        apply_lemma(tokens);
    }
    return tokens;
}

}  // namespace

TokenizedComment run_pipeline(const Comment& comment, const PipelineConfig& config) {
    std::vector<std::string> tokens = tokenize(normalize(comment.text, config));
    return {comment.id, run_token_steps(std::move(tokens), config, nullptr)};
}

std::vector<TokenizedComment> run_pipeline(const std::vector<Comment>& comments,
                                           const PipelineConfig& config) {
    std::vector<TokenizedComment> out;
    out.reserve(comments.size());
    std::unordered_map<std::string, std::string> spell_cache;
    for (const auto& comment : comments) {
        std::vector<std::string> tokens = tokenize(normalize(comment.text, config));
        out.push_back({comment.id, run_token_steps(std::move(tokens), config, &spell_cache)});
    }
    return out;
}

}  // namespace ytcc
