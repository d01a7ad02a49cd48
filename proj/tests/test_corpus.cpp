#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "ytcc/corpus.hpp"
#include "ytcc/errors.hpp"

using namespace ytcc;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = (std::filesystem::temp_directory_path() / name).string();
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("comment class names round-trip and parse case-insensitively") {
    for (CommentClass c : kAllClasses) {
        CHECK(parse_comment_class(to_string(c)) == c);
    }
    CHECK(parse_comment_class("Positive") == CommentClass::Positive);
    CHECK(parse_comment_class("MISCELLANEOUS") == CommentClass::Miscellaneous);
    CHECK(parse_comment_class("InTeRrOgAtIvE") == CommentClass::Interrogative);
    CHECK_FALSE(parse_comment_class("question").has_value());
    CHECK(kAllClasses.size() == 6);
}

TEST_CASE("load_dataset reads csv rows in order with histogram") {
    const auto path = write_temp("ytcc_load.csv",
                                 "id,video_id,text,label\n"
                                 "a,v1,\"Nice video, thanks!\",positive\n"
                                 "b,v1,\"this is broken\",negative\n"
                                 "c,,\"how does it work?\",interrogative\n");
    const Dataset ds = load_dataset(path, FileFormat::Csv);
    REQUIRE(ds.size() == 3);
    CHECK(ds.records[0].comment.id == "a");
    CHECK(ds.records[0].comment.text == "Nice video, thanks!");
    CHECK(ds.records[0].label == CommentClass::Positive);
    CHECK(ds.records[2].comment.video_id == std::nullopt);
    const auto hist = class_histogram(ds);
    CHECK(hist[static_cast<int>(CommentClass::Positive)] == 1);
    CHECK(hist[static_cast<int>(CommentClass::Negative)] == 1);
    CHECK(hist[static_cast<int>(CommentClass::Interrogative)] == 1);
    CHECK(hist[static_cast<int>(CommentClass::Imperative)] == 0);
}

TEST_CASE("load_dataset rejects unknown labels naming the row and accepted set") {
    const auto path = write_temp("ytcc_badlabel.csv",
                                 "id,video_id,text,label\n"
                                 "a,v1,hello,positive\n"
                                 "b,v1,what,question\n");
    try {
        load_dataset(path, FileFormat::Csv);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        const std::string message = e.what();
        CHECK(message.find("row 3") != std::string::npos);
        CHECK(message.find("question") != std::string::npos);
        CHECK(message.find("positive") != std::string::npos);
        CHECK(message.find("miscellaneous") != std::string::npos);
    }
}

TEST_CASE("load_dataset rejects duplicates, empty text and missing files") {
    CHECK_THROWS_AS(load_dataset("/nonexistent/file.csv", FileFormat::Csv), IoError);
    const auto dup = write_temp("ytcc_dup.csv",
                                "id,video_id,text,label\n"
                                "a,v1,hello,positive\n"
                                "a,v1,world,negative\n");
    CHECK_THROWS_AS(load_dataset(dup, FileFormat::Csv), SchemaError);
    const auto empty = write_temp("ytcc_empty.csv",
                                  "id,video_id,text,label\n"
                                  "a,v1,\"\",positive\n");
    CHECK_THROWS_AS(load_dataset(empty, FileFormat::Csv), SchemaError);
    const auto bad_header = write_temp("ytcc_hdr.csv", "id,text,label\na,b,positive\n");
    CHECK_THROWS_AS(load_dataset(bad_header, FileFormat::Csv), SchemaError);
}

TEST_CASE("csv text with quotes, commas and newlines survives a round-trip") {
    Dataset ds;
    ds.records.push_back({Comment{"a", "line one\nline two, \"quoted\"", "v1"}, CommentClass::Positive});
    ds.records.push_back({Comment{"b", "plain", std::nullopt}, CommentClass::Miscellaneous});
    const auto path = (std::filesystem::temp_directory_path() / "ytcc_round.csv").string();
    save_dataset(ds, path, FileFormat::Csv);
    const Dataset loaded = load_dataset(path, FileFormat::Csv);
    REQUIRE(loaded.size() == ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(loaded.records[i].comment.id == ds.records[i].comment.id);
        CHECK(loaded.records[i].comment.text == ds.records[i].comment.text);
        CHECK(loaded.records[i].comment.video_id == ds.records[i].comment.video_id);
        CHECK(loaded.records[i].label == ds.records[i].label);
    }
}

TEST_CASE("jsonl round-trip preserves content and nullable video_id") {
    Dataset ds;
    ds.records.push_back({Comment{"x", "emoji 😀 and \"quotes\"", std::nullopt}, CommentClass::Negative});
    ds.records.push_back({Comment{"y", "tab\tand\\backslash", "vid"}, CommentClass::Corrective});
    const auto path = (std::filesystem::temp_directory_path() / "ytcc_round.jsonl").string();
    save_dataset(ds, path, FileFormat::Jsonl);
    const Dataset loaded = load_dataset(path, FileFormat::Jsonl);
    REQUIRE(loaded.size() == 2);
    CHECK(loaded.records[0].comment.text == ds.records[0].comment.text);
    CHECK(loaded.records[0].comment.video_id == std::nullopt);
    CHECK(loaded.records[1].comment.video_id == "vid");
}

namespace {

Dataset numbered_dataset(std::size_t n) {
    Dataset ds;
    for (std::size_t i = 0; i < n; ++i) {
        ds.records.push_back({Comment{"id" + std::to_string(i), "text " + std::to_string(i), "v"},
                              static_cast<CommentClass>(i % kNumClasses)});
    }
    return ds;
}

}  // namespace

TEST_CASE("split produces an 8/2 partition that is reproducible") {
    const Dataset ds = numbered_dataset(10);
    SplitSpec spec;
    spec.train_fraction = 0.8;
    spec.seed = 42;
    const auto [train1, test1] = split(ds, spec);
    CHECK(train1.size() == 8);
    CHECK(test1.size() == 2);

    std::set<std::string> seen;
    for (const auto& r : train1.records) seen.insert(r.comment.id);
    for (const auto& r : test1.records) seen.insert(r.comment.id);
    CHECK(seen.size() == 10);  // partition, no overlap

    const auto [train2, test2] = split(ds, spec);
    REQUIRE(train2.size() == train1.size());
    for (std::size_t i = 0; i < train1.size(); ++i) {
        CHECK(train1.records[i].comment.id == train2.records[i].comment.id);
    }
    for (std::size_t i = 0; i < test1.size(); ++i) {
        CHECK(test1.records[i].comment.id == test2.records[i].comment.id);
    }
}

TEST_CASE("different seeds give different partitions, same seed identical ones") {
    const Dataset ds = numbered_dataset(40);
    SplitSpec a;
    a.seed = 1;
    SplitSpec b;
    b.seed = 2;
    auto test_ids = [](const Dataset& d) {
        std::vector<std::string> ids;
        for (const auto& r : d.records) ids.push_back(r.comment.id);
        return ids;
    };
    const auto [ta1, sa1] = split(ds, a);
    const auto [ta2, sa2] = split(ds, a);
    const auto [tb, sb] = split(ds, b);
    CHECK(test_ids(sa1) == test_ids(sa2));
    CHECK(test_ids(sa1) != test_ids(sb));
}

TEST_CASE("split scales to the 80/20 protocol size") {
    const Dataset ds = numbered_dataset(10000);
    SplitSpec spec;
    spec.train_fraction = 0.8;
    spec.seed = 7;
    const auto [train, test] = split(ds, spec);
    CHECK(train.size() == 8000);
    CHECK(test.size() == 2000);
}

TEST_CASE("split rejects degenerate inputs") {
    Dataset one;
    one.records.push_back({Comment{"a", "x", "v"}, CommentClass::Positive});
    SplitSpec spec;
    CHECK_THROWS_AS(split(one, spec), SchemaError);
    const Dataset ds = numbered_dataset(4);
    SplitSpec bad;
    bad.train_fraction = 1.0;
    CHECK_THROWS_AS(split(ds, bad), SchemaError);
}

TEST_CASE("stratified split keeps per-class proportions") {
    Dataset ds;
    for (std::size_t i = 0; i < 50; ++i) {
        ds.records.push_back({Comment{"p" + std::to_string(i), "t", "v"}, CommentClass::Positive});
    }
    for (std::size_t i = 0; i < 10; ++i) {
        ds.records.push_back({Comment{"n" + std::to_string(i), "t", "v"}, CommentClass::Negative});
    }
    SplitSpec spec;
    spec.train_fraction = 0.8;
    spec.seed = 3;
    spec.stratified = true;
    const auto [train, test] = split(ds, spec);
    const auto train_hist = class_histogram(train);
    CHECK(train_hist[static_cast<int>(CommentClass::Positive)] == 40);
    CHECK(train_hist[static_cast<int>(CommentClass::Negative)] == 8);
}

TEST_CASE("empty dataset histogram is all zero") {
    const Dataset ds;
    const auto hist = class_histogram(ds);
    for (std::size_t count : hist) CHECK(count == 0);
}

TEST_CASE("load_comments accepts unlabeled jsonl and labeled csv") {
    const auto raw = write_temp("ytcc_raw.jsonl",
                                "{\"id\":\"r1\",\"video_id\":null,\"text\":\"hi there\"}\n"
                                "{\"id\":\"r2\",\"video_id\":\"v\",\"text\":\"ok\"}\n");
    const auto comments = load_comments(raw, FileFormat::Jsonl);
    REQUIRE(comments.size() == 2);
    CHECK(comments[0].video_id == std::nullopt);
    CHECK(comments[1].video_id == "v");

    const auto labeled = write_temp("ytcc_labeled.csv",
                                    "id,video_id,text,label\n"
                                    "a,v1,hello,positive\n");
    CHECK(load_comments(labeled, FileFormat::Csv).size() == 1);
}
