#include "ytcc/resources.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include "build_config.hpp"
#include "ytcc/errors.hpp"
#include "ytcc/hash.hpp"

namespace ytcc {
namespace {

std::string read_file_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::string default_resource_dir() {
    if (const char* env = std::getenv("YTCC_RESOURCES"); env && *env) return env;
    return build::kSourceResourceDir;
}

std::unordered_set<std::string> load_wordlist(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        words.insert(line);
    }
    return words;
}

PipelineConfig default_pipeline_config(const std::string& resource_dir) {
    const std::string stopwords_path = resource_dir + "/stopwords_en.txt";
    const std::string exceptions_path = resource_dir + "/stopword_exceptions.txt";
    const std::string dictionary_path = resource_dir + "/spell_dictionary.tsv";
    const std::string lemma_table_path = resource_dir + "/lemma_table.tsv";
    const std::string suffix_rules_path = resource_dir + "/lemma_suffix_rules.tsv";

    PipelineConfig config;
    config.stopwords = load_wordlist(stopwords_path);
    config.stopword_exceptions = load_wordlist(exceptions_path);
    config.speller = std::make_shared<SpellModel>(SpellModel::from_file(dictionary_path));
    config.lemmatizer =
        std::make_shared<LemmaModel>(LemmaModel::from_files(lemma_table_path, suffix_rules_path));

    std::uint64_t h = fnv1a64(read_file_bytes(stopwords_path));
    h = fnv1a64(read_file_bytes(exceptions_path), h);
    h = fnv1a64(read_file_bytes(dictionary_path), h);
    h = fnv1a64(read_file_bytes(lemma_table_path), h);
    h = fnv1a64(read_file_bytes(suffix_rules_path), h);
    config.resource_fingerprint = to_hex(h);
    return config;
}

}  // namespace ytcc
