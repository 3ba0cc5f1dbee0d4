#pragma once

#include <filesystem>
#include <string>

#include "lexqa/corpus/corpus_reader.hpp"
#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/kv_file.hpp"
#include "lexqa/score/scorer.hpp"
#include "lexqa/space/space_store.hpp"

namespace lexqa::eval {

/// Every numeric knob of the engine. Config files use `key = value` lines:
///
///   min_stopwords = 1        corpus English filter
///   segment_mode = rules     rules | lines
///   min_sentences = 10       pseudo-document minimum
///   cap = 50000              pseudo-document maximum
///   match_mode = surface     surface | stemmed
///   min_support = 10         terminology feature threshold
///   conj_window = 10
///   conj_window_counts_stopwords = 1
///   context_window = 3
///   min_occurrences = 10     word-space row threshold
///   step1_keep = 10
///   step2_keep = 4
///   step3_keep = 1
///   k = 5                    top sentences averaged in step 4
///   m = 6                    largest word subset in step 4.2
///   subset_candidate_cap = 12
///   threads = 0              0 = all cores
struct EngineConfig {
    corpus::CorpusOptions corpus{};
    corpus::PseudoDocOptions pseudo_docs{};
    space::SpaceBuildOptions spaces{};
    score::BeamConfig beam{};
    unsigned threads = 0;

    /// Applies the keys present in `kv`; unknown keys are an error.
    void apply(const KeyValues& kv);
    KeyValues snapshot() const;
    void validate() const;
};

EngineConfig load_config(const std::filesystem::path& path);

}  // namespace lexqa::eval
