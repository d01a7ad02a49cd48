#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cctype>
#include <fstream>

#include "support/oracles.hpp"
#include "ytcc/corpus.hpp"
#include "ytcc/preprocess.hpp"
#include "ytcc/resources.hpp"
#include "ytcc/rng.hpp"

using namespace ytcc;

namespace {

const PipelineConfig& shipped_config() {
    static const PipelineConfig config = default_pipeline_config();
    return config;
}

PipelineConfig bare_config() {
    PipelineConfig config;  // all character steps on, no models/stopwords
    return config;
}

}  // namespace

// ----------------------------------------------------------- normalize

TEST_CASE("normalize applies the default steps in order") {
    const PipelineConfig config = bare_config();
    CHECK(normalize("Love this!\nSee https://x.co", config) == "love this see");
    CHECK(normalize("", config) == "");
    CHECK(normalize("Thank you sooo much , sir!", config) == "thank you sooo much sir");
}

TEST_CASE("normalize strips urls with scheme and www prefixes") {
    const PipelineConfig config = bare_config();
    CHECK(normalize("go to www.example.com now", config) == "go to now");
    CHECK(normalize("see HTTPS://Foo.Bar/baz?q=1 end", config) == "see end");
    CHECK(normalize("(https://x.co)", config) == "");
    CHECK(normalize("wrapped http://a.b/c#d text", config) == "wrapped text");
}

TEST_CASE("normalize removes digit runs but keeps letters of mixed tokens") {
    const PipelineConfig config = bare_config();
    CHECK(normalize("windows 10 rocks", config) == "windows rocks");
    CHECK(normalize("convert mp4 files", config) == "convert mp files");
    CHECK(normalize("123 456", config) == "");
}

TEST_CASE("normalize drops emoji code points") {
    const PipelineConfig config = bare_config();
    CHECK(normalize("great \xF0\x9F\x98\x80 video", config) == "great video");      // U+1F600
    CHECK(normalize("thanks \xE2\x9C\x94 done", config) == "thanks done");          // U+2714
    CHECK(normalize("flag \xF0\x9F\x87\xBA\xF0\x9F\x87\xB8 here", config) == "flag here");
    CHECK(normalize("\xF0\x9F\x98\x80\xF0\x9F\x98\x80", config) == "");
}

TEST_CASE("normalize respects step toggles") {
    PipelineConfig config = bare_config();
    config.remove_integers = false;
    CHECK(normalize("windows 10", config) == "windows 10");
    config = bare_config();
    config.lowercase = false;
    CHECK(normalize("Love IT", config) == "Love IT");
    config = bare_config();
    config.remove_punctuation = false;
    CHECK(normalize("wait, what?", config) == "wait, what?");
}

TEST_CASE("unicode punctuation splits tokens like ascii punctuation") {
    const PipelineConfig config = bare_config();
    CHECK(normalize("code\xE2\x80\xA6I think", config) == "code i think");  // ellipsis
    CHECK(normalize("it\xE2\x80\x99s fine", config) == "it s fine");        // curly apostrophe
}

TEST_CASE("invalid utf-8 bytes pass through without crashing") {
    const PipelineConfig config = bare_config();
    const std::string broken = std::string("ok \xFF\xFE done");
    const std::string out = normalize(broken, config);
    CHECK(out.find("ok") != std::string::npos);
    CHECK(out.find("done") != std::string::npos);
}

// ------------------------------------------------------ spell correction

TEST_CASE("spell correction follows frequency, then distance, then lexicographic order") {
    SpellModel model({{"please", 1000}, {"piece", 400}, {"plz", 0}}, 2);
    SUBCASE("in-dictionary token untouched") {
        CHECK(correct_spelling({"please"}, model) == std::vector<std::string>{"please"});
    }
    SUBCASE("frequency dominates distance") {
        // "pleasee" sits at distance 1 from both candidates; frequency decides
        SpellModel m({{"please", 1000}, {"pleases", 1}}, 2);
        CHECK(m.correct("pleasee") == "please");
    }
    SUBCASE("higher frequency beats smaller distance") {
        SpellModel m({{"the", 1000}, {"thx", 10}}, 2);
        CHECK(m.correct("thxx") == "the");  // distance 2 but far more frequent
    }
    SUBCASE("ties broken by smaller distance then lexicographic") {
        SpellModel m({{"aaab", 10}, {"aaac", 10}, {"aabb", 10}}, 2);
        // query "aaaa": aaab and aaac at distance 1, aabb at 2, equal frequencies
        CHECK(m.correct("aaaa") == "aaab");
    }
}

TEST_CASE("plz corrects to please when it is the nearest high-frequency candidate") {
    SpellModel model({{"please", 5000}, {"plus", 200}, {"play", 100}}, 4);
    CHECK(model.correct("plz") == "please");
}

TEST_CASE("token with empty edit-distance neighbourhood is kept verbatim") {
    const std::vector<std::pair<std::string, std::uint64_t>> entries = {
        {"alpha", 10}, {"beta", 8}, {"gamma", 6}};
    SpellModel model(entries, 2);
    const std::string query = "xqzw";
    for (const auto& [word, freq] : entries) {
        CHECK(oracle::edit_distance(query, word) > 2);  // neighbourhood verifiably empty
    }
    CHECK(model.correct(query) == "xqzw");
}

TEST_CASE("bounded edit distance agrees with the reference implementation") {
    const std::vector<std::string> words = {"",     "a",      "ab",    "plz",    "please",
                                            "video", "vdieo",  "watch", "watcch", "running"};
    for (const auto& a : words) {
        for (const auto& b : words) {
            const int reference = oracle::edit_distance(a, b);
            for (int limit = 0; limit <= 4; ++limit) {
                const int bounded = bounded_edit_distance(a, b, limit);
                if (reference <= limit) CHECK(bounded == reference);
                else CHECK(bounded == limit + 1);
            }
        }
    }
}

TEST_CASE("spell correction is a fixpoint") {
    const SpellModel& model = *shipped_config().speller;
    const std::vector<std::string> tokens = {"plz", "thnks", "awsome", "vedio", "sooo", "hlep"};
    const auto once = correct_spelling(tokens, model);
    const auto twice = correct_spelling(once, model);
    CHECK(once == twice);
}

// ---------------------------------------------------------- lemmatizer

TEST_CASE("lemmatizer table lookup precedes suffix rules") {
    LemmaModel model({{"running", "run"}}, {{"ing", ""}});
    CHECK(lemmatize({"running"}, model) == std::vector<std::string>{"run"});
    CHECK(lemmatize({"run"}, model) == std::vector<std::string>{"run"});
}

TEST_CASE("shipped lemma resources handle common inflections") {
    const LemmaModel& model = *shipped_config().lemmatizer;
    CHECK(lemmatize({"videos", "helped"}, model) == std::vector<std::string>{"video", "help"});
    CHECK(model.lemma("classes") == "class");
    CHECK(model.lemma("watches") == "watch");
    CHECK(model.lemma("studies") == "study");
    CHECK(model.lemma("running") == "run");
    CHECK(model.lemma("stopped") == "stop");
    CHECK(model.lemma("makes") == "make");
    CHECK(model.lemma("made") == "make");
    CHECK(model.lemma("went") == "go");
    CHECK(model.lemma("does") == "do");
    CHECK(model.lemma("children") == "child");
    CHECK(model.lemma("this") == "this");
    CHECK(model.lemma("was") == "was");
    CHECK(model.lemma("business") == "business");
    CHECK(model.lemma("need") == "need");
}

TEST_CASE("shipped lemmatizer is idempotent over the spell dictionary") {
    const LemmaModel& model = *shipped_config().lemmatizer;
    std::ifstream dict(default_resource_dir() + "/spell_dictionary.tsv");
    REQUIRE(dict.good());
    std::string line;
    std::size_t checked = 0;
    while (std::getline(dict, line)) {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        const std::string word = line.substr(0, tab);
        const std::string once = model.lemma(word);
        CHECK_MESSAGE(model.lemma(once) == once, "word: ", word, " lemma: ", once);
        ++checked;
    }
    CHECK(checked > 2000);
}

TEST_CASE("lemmatizer idempotence holds on random letter strings") {
    const LemmaModel& model = *shipped_config().lemmatizer;
    Rng rng(99);
    for (int i = 0; i < 2000; ++i) {
        std::string word;
        const std::size_t len = 1 + rng.below(12);
        for (std::size_t c = 0; c < len; ++c) {
            word.push_back(static_cast<char>('a' + rng.below(26)));
        }
        const std::string once = model.lemma(word);
        CHECK_MESSAGE(model.lemma(once) == once, "word: ", word, " lemma: ", once);
    }
}

// ----------------------------------------------------------- stopwords

TEST_CASE("shipped stopword list has the standard 179 entries") {
    const auto words = load_wordlist(default_resource_dir() + "/stopwords_en.txt");
    CHECK(words.size() == 179);
    CHECK(words.count("the"));
    CHECK(words.count("wouldn't"));
}

TEST_CASE("stopword removal keeps exception words") {
    const PipelineConfig& config = shipped_config();
    CHECK(remove_stopwords({"why", "is", "this", "not", "working"}, config) ==
          std::vector<std::string>{"why", "is", "not", "working"});
    CHECK(remove_stopwords({"thank", "you"}, config) == std::vector<std::string>{"thank"});
    CHECK(remove_stopwords({}, config).empty());
}

TEST_CASE("every exception word survives removal") {
    const PipelineConfig& config = shipped_config();
    for (const auto& word : config.stopword_exceptions) {
        const auto kept = remove_stopwords({word}, config);
        CHECK_MESSAGE(kept == std::vector<std::string>{word}, "exception lost: ", word);
    }
}

TEST_CASE("exception words missing from the list produce warnings") {
    const auto warnings = config_warnings(shipped_config());
    // "could" and "would" are class signals but not standard stopwords.
    REQUIRE(warnings.size() == 2);
    CHECK(warnings[0].find("could") != std::string::npos);
    CHECK(warnings[1].find("would") != std::string::npos);
}

// ------------------------------------------------------------- pipeline

TEST_CASE("url and emoji-only comments tokenize to nothing") {
    const Comment comment{"c1", "https://only.example \xF0\x9F\x98\x80", std::nullopt};
    const TokenizedComment out = run_pipeline(comment, shipped_config());
    CHECK(out.id == "c1");
    CHECK(out.tokens.empty());
}

TEST_CASE("disabling spell correction leaves plz intact") {
    PipelineConfig config = shipped_config();
    REQUIRE(disable_step(config, "spell_correction"));
    const Comment comment{"c", "plz explain", std::nullopt};
    const auto tokens = run_pipeline(comment, config).tokens;
    CHECK(std::find(tokens.begin(), tokens.end(), "plz") != tokens.end());
    CHECK_FALSE(disable_step(config, "nonsense_step"));
}

TEST_CASE("full pipeline keeps interrogative signals and drops integers") {
    const Comment comment{"c200", "hi, how to do this environment setting on windows 10",
                          std::nullopt};
    const auto tokens = run_pipeline(comment, shipped_config()).tokens;
    CHECK(std::find(tokens.begin(), tokens.end(), "how") != tokens.end());
    CHECK(std::find(tokens.begin(), tokens.end(), "10") == tokens.end());
}

TEST_CASE("pipeline is deterministic") {
    const Comment comment{"c", "Plz   HELP!! why is my CODE... broken 404 \xF0\x9F\x98\xAD",
                          std::nullopt};
    const auto a = run_pipeline(comment, shipped_config()).tokens;
    const auto b = run_pipeline(comment, shipped_config()).tokens;
    CHECK(a == b);
}

TEST_CASE("default pipeline output contains no digits, punctuation or whitespace") {
    const PipelineConfig& config = shipped_config();
    Rng rng(1234);
    const std::string alphabet =
        "abcXYZ0123456789 .,!?\n\t:;()[]'\"@#$%^&*-_=+~`|\\/<>{}\xF0\x9F\x98\x80";
    for (int i = 0; i < 300; ++i) {
        std::string text;
        const std::size_t len = rng.below(60);
        for (std::size_t c = 0; c < len; ++c) text.push_back(alphabet[rng.below(alphabet.size())]);
        const auto tokens = run_pipeline(Comment{"r", text, std::nullopt}, config).tokens;
        for (const auto& token : tokens) {
            CHECK_FALSE(token.empty());
            for (unsigned char ch : token) {
                if (ch < 128) {
                    CHECK_FALSE(std::isdigit(ch));
                    CHECK_FALSE(std::isspace(ch));
                    CHECK_FALSE(std::ispunct(ch));
                }
            }
        }
    }
}

TEST_CASE("batch pipeline equals per-comment pipeline") {
    std::vector<Comment> comments = {
        {"a", "Thanks sooo much!!", std::nullopt},
        {"b", "why is this brokn?", std::nullopt},
        {"c", "plz do a video on trees", std::nullopt},
    };
    const auto batch = run_pipeline(comments, shipped_config());
    REQUIRE(batch.size() == comments.size());
    for (std::size_t i = 0; i < comments.size(); ++i) {
        CHECK(batch[i].tokens == run_pipeline(comments[i], shipped_config()).tokens);
    }
}

TEST_CASE("lemmatize/stopword order is configurable") {
    PipelineConfig config = shipped_config();
    config.lemmatize_before_stopwords = false;
    const Comment comment{"c", "does anyone know", std::nullopt};
    const auto after = run_pipeline(comment, config).tokens;
    // "does" survives: protected as an exception, then lemmatized to "do".
    CHECK(std::find(after.begin(), after.end(), "do") != after.end());
}
