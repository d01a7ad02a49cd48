#pragma once

// Synthetic labeled corpora with a learnable class signal. Used by
// integration tests and the acceptance harness to exercise the full
// protocol without the published dataset.

#include <string>
#include <vector>

#include "ytcc/corpus.hpp"
#include "ytcc/rng.hpp"

namespace synthetic {

inline ytcc::Dataset labeled_corpus(std::size_t n, std::uint64_t seed) {
    using ytcc::CommentClass;
    struct ClassTemplate {
        CommentClass label;
        std::vector<std::string> cues;
    };
    static const std::vector<ClassTemplate> templates = {
        {CommentClass::Positive,
         {"thank you so much sir", "great video really helped", "awesome explanation loved it",
          "best tutorial ever seen", "amazing work keep going", "this channel deserves more"}},
        {CommentClass::Negative,
         {"this does not work at all", "worst explanation ever seen", "waste of my time",
          "got no clue what you said", "audio is terrible cannot hear", "you keep repeating yourself"}},
        {CommentClass::Interrogative,
         {"how do i install this", "what does this function do", "why is my output different",
          "which version should i use", "can you tell me where", "is this valid for windows"}},
        {CommentClass::Imperative,
         {"please make a video about", "explain the second part please", "do a series on graphs",
          "upload the source code please", "share the slides with us", "continue this playlist"}},
        {CommentClass::Corrective,
         {"the complexity should be linear", "you wrote the wrong formula",
          "correct me if wrong but", "there is a mistake at", "that should return zero instead",
          "the loop bound is off"}},
        {CommentClass::Miscellaneous,
         {"first comment here", "check out my channel", "who is watching in",
          "random thought of the day", "hello from my country", "nice weather today folks"}},
    };
    static const std::vector<std::string> filler = {
        "video", "code",  "time", "people", "series", "part",  "really", "just",
        "like",  "thing", "way",  "today",  "lesson", "point", "still",  "well",
    };

    ytcc::Rng rng(seed);
    ytcc::Dataset ds;
    ds.provenance = "synthetic";
    for (std::size_t i = 0; i < n; ++i) {
        const auto& tmpl = templates[rng.below(templates.size())];
        std::string text = tmpl.cues[rng.below(tmpl.cues.size())];
        const std::size_t extra = rng.below(4);
        for (std::size_t e = 0; e < extra; ++e) {
            text += " " + filler[rng.below(filler.size())];
        }
        ds.records.push_back(
            {ytcc::Comment{"syn" + std::to_string(i), text, std::nullopt}, tmpl.label});
    }
    return ds;
}

}  // namespace synthetic
