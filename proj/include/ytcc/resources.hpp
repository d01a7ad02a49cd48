#pragma once

#include <string>
#include <unordered_set>

#include "ytcc/preprocess.hpp"

namespace ytcc {

/// Resource directory resolution: the YTCC_RESOURCES environment
/// variable when set, otherwise the repository resources/ directory
/// baked in at configure time.
std::string default_resource_dir();

/// One word per line, UTF-8; blank lines and '#' comments skipped.
std::unordered_set<std::string> load_wordlist(const std::string& path);

/// Loads the shipped stopword list, exception set, spell dictionary and
/// lemma resources; fills PipelineConfig::resource_fingerprint.
PipelineConfig default_pipeline_config(const std::string& resource_dir = default_resource_dir());

}  // namespace ytcc
