#include "ytcc/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "ytcc/csv.hpp"
#include "ytcc/errors.hpp"
#include "ytcc/rng.hpp"

namespace ytcc {

const std::array<CommentClass, kNumClasses> kAllClasses = {
    CommentClass::Positive,      CommentClass::Negative,  CommentClass::Interrogative,
    CommentClass::Imperative,    CommentClass::Corrective, CommentClass::Miscellaneous,
};

namespace {

const std::array<std::string, kNumClasses> kClassNames = {
    "positive", "negative", "interrogative", "imperative", "corrective", "miscellaneous",
};

std::string lowercase_ascii(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

const std::string& to_string(CommentClass c) {
    return kClassNames[static_cast<int>(c)];
}

std::optional<CommentClass> parse_comment_class(const std::string& text) {
    const std::string lowered = lowercase_ascii(text);
    for (int i = 0; i < kNumClasses; ++i) {
        if (lowered == kClassNames[i]) return static_cast<CommentClass>(i);
    }
    return std::nullopt;
}

std::string accepted_labels() {
    std::string out;
    for (int i = 0; i < kNumClasses; ++i) {
        if (i) out += ", ";
        out += kClassNames[i];
    }
    return out;
}

namespace {

struct RawRow {
    std::string id;
    std::optional<std::string> video_id;
    std::string text;
    std::optional<std::string> label;
    std::size_t row_number = 0;  // 1-based, header included for CSV
};

std::vector<RawRow> read_csv_rows(const std::string& path) {
    const csv::Table table = csv::read_file(path);
    const std::vector<std::string> expected = {"id", "video_id", "text", "label"};
    if (table.header != expected) {
        throw SchemaError(path + ": expected header id,video_id,text,label");
    }
    std::vector<RawRow> rows;
    rows.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        const std::size_t row_number = i + 2;
        if (r.size() != 4) {
            throw ParseError(path + " row " + std::to_string(row_number) + ": expected 4 fields, got " +
                             std::to_string(r.size()));
        }
        RawRow row;
        row.id = r[0];
        if (!r[1].empty()) row.video_id = r[1];
        row.text = r[2];
        row.label = r[3];
        row.row_number = row_number;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RawRow> read_jsonl_rows(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<RawRow> rows;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + " row " + std::to_string(line_number) + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text")) {
            throw ParseError(path + " row " + std::to_string(line_number) +
                             ": object with \"id\" and \"text\" required");
        }
        RawRow row;
        row.row_number = line_number;
        try {
            row.id = j.at("id").get<std::string>();
            row.text = j.at("text").get<std::string>();
            if (j.contains("video_id") && !j.at("video_id").is_null()) {
                row.video_id = j.at("video_id").get<std::string>();
            }
            if (j.contains("label") && !j.at("label").is_null()) {
                row.label = j.at("label").get<std::string>();
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path + " row " + std::to_string(line_number) + ": " + e.what());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<RawRow> read_rows(const std::string& path, FileFormat format) {
    return format == FileFormat::Csv ? read_csv_rows(path) : read_jsonl_rows(path);
}

}  // namespace

Dataset load_dataset(const std::string& path, FileFormat format) {
    Dataset ds;
    ds.provenance = path;
    std::unordered_set<std::string> seen_ids;
    for (const RawRow& row : read_rows(path, format)) {
        const std::string where = path + " row " + std::to_string(row.row_number);
        if (row.text.empty()) throw SchemaError(where + ": empty text");
        if (!row.label) throw SchemaError(where + ": missing label");
        const auto label = parse_comment_class(*row.label);
        if (!label) {
            throw SchemaError(where + ": unknown label \"" + *row.label +
                              "\" (accepted: " + accepted_labels() + ")");
        }
        if (!seen_ids.insert(row.id).second) {
            throw SchemaError(where + ": duplicate id \"" + row.id + "\"");
        }
        ds.records.push_back({Comment{row.id, row.text, row.video_id}, *label});
    }
    return ds;
}

std::vector<Comment> load_comments(const std::string& path, FileFormat format) {
    std::vector<Comment> comments;
    std::unordered_set<std::string> seen_ids;
    for (const RawRow& row : read_rows(path, format)) {
        const std::string where = path + " row " + std::to_string(row.row_number);
        if (row.text.empty()) throw SchemaError(where + ": empty text");
        if (!seen_ids.insert(row.id).second) {
            throw SchemaError(where + ": duplicate id \"" + row.id + "\"");
        }
        comments.push_back(Comment{row.id, row.text, row.video_id});
    }
    return comments;
}

void save_dataset(const Dataset& dataset, const std::string& path, FileFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    if (format == FileFormat::Csv) {
        out << "id,video_id,text,label\n";
        for (const auto& rec : dataset.records) {
            out << csv::escape(rec.comment.id) << ','
                << csv::escape(rec.comment.video_id.value_or("")) << ','
                << csv::escape(rec.comment.text, /*force_quote=*/true) << ','
                << to_string(rec.label) << '\n';
        }
    } else {
        for (const auto& rec : dataset.records) {
            nlohmann::json j;
            j["id"] = rec.comment.id;
            j["video_id"] = rec.comment.video_id ? nlohmann::json(*rec.comment.video_id)
                                                 : nlohmann::json(nullptr);
            j["text"] = rec.comment.text;
            j["label"] = to_string(rec.label);
            out << j.dump() << '\n';
        }
    }
    if (!out) throw IoError("write failed: " + path);
}

std::pair<Dataset, Dataset> split(const Dataset& dataset, const SplitSpec& spec) {
    if (dataset.size() < 2) throw SchemaError("split requires at least 2 records");
    if (!(spec.train_fraction > 0.0 && spec.train_fraction < 1.0)) {
        throw SchemaError("train_fraction must lie strictly between 0 and 1");
    }
    const std::size_t n = dataset.size();

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    std::vector<bool> in_train(n, false);
    Rng rng(spec.seed);
    if (!spec.stratified) {
        std::size_t n_train = static_cast<std::size_t>(std::llround(spec.train_fraction * static_cast<double>(n)));
        n_train = std::clamp<std::size_t>(n_train, 1, n - 1);
        rng.shuffle(order);
        for (std::size_t i = 0; i < n_train; ++i) in_train[order[i]] = true;
    } else {
        // Per-class proportional allocation; remainder handling per class.
        for (CommentClass c : kAllClasses) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < n; ++i) {
                if (dataset.records[i].label == c) members.push_back(i);
            }
            if (members.empty()) continue;
            std::size_t k = static_cast<std::size_t>(
                std::llround(spec.train_fraction * static_cast<double>(members.size())));
            k = std::min(k, members.size());
            rng.shuffle(members);
            for (std::size_t i = 0; i < k; ++i) in_train[members[i]] = true;
        }
        // Guarantee both parts non-empty.
        const std::size_t train_count =
            static_cast<std::size_t>(std::count(in_train.begin(), in_train.end(), true));
        if (train_count == 0) in_train[0] = true;
        if (train_count == n) in_train[n - 1] = false;
    }

    Dataset train, test;
    train.provenance = dataset.provenance + "#train";
    test.provenance = dataset.provenance + "#test";
    for (std::size_t i = 0; i < n; ++i) {
        (in_train[i] ? train : test).records.push_back(dataset.records[i]);
    }
    return {std::move(train), std::move(test)};
}

std::array<std::size_t, kNumClasses> class_histogram(const Dataset& dataset) {
    std::array<std::size_t, kNumClasses> counts{};
    for (const auto& rec : dataset.records) counts[static_cast<int>(rec.label)]++;
    return counts;
}

}  // namespace ytcc
