#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ytcc {

/// The six comment categories. Enumerator order is the canonical class
/// order everywhere: class indices, tie-breaking, confusion-matrix axes.
enum class CommentClass : int {
    Positive = 0,
    Negative,
    Interrogative,
    Imperative,
    Corrective,
    Miscellaneous,
};

inline constexpr int kNumClasses = 6;

extern const std::array<CommentClass, kNumClasses> kAllClasses;

/// Canonical lowercase name ("positive", ...).
const std::string& to_string(CommentClass c);

/// Case-insensitive parse of a canonical name; nullopt on anything else.
std::optional<CommentClass> parse_comment_class(const std::string& text);

/// Comma-separated list of the accepted label names (for error messages).
std::string accepted_labels();

struct Comment {
    std::string id;
    std::string text;
    std::optional<std::string> video_id;
};

struct LabeledComment {
    Comment comment;
    CommentClass label;
};

struct Dataset {
    std::vector<LabeledComment> records;
    std::string provenance;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
};

struct SplitSpec {
    double train_fraction = 0.8;
    std::uint64_t seed = 0;
    bool stratified = false;  // off by default; uniform random split
};

enum class FileFormat { Csv, Jsonl };

/// Loads a labeled dataset. Rejects empty text, unknown labels and
/// duplicate ids; errors name the offending row.
Dataset load_dataset(const std::string& path, FileFormat format);

void save_dataset(const Dataset& dataset, const std::string& path, FileFormat format);

/// Unlabeled comments (JSONL without "label", or either schema with the
/// label column ignored). Used by the prediction path.
std::vector<Comment> load_comments(const std::string& path, FileFormat format);

/// Seeded random partition. |train| = round(train_fraction * N), clamped
/// so both parts are non-empty; record order within each part follows the
/// input dataset. Identical (dataset, spec) inputs give identical splits
/// on every platform.
std::pair<Dataset, Dataset> split(const Dataset& dataset, const SplitSpec& spec);

/// Per-class record counts, indexed by class; sums to dataset size.
std::array<std::size_t, kNumClasses> class_histogram(const Dataset& dataset);

}  // namespace ytcc
