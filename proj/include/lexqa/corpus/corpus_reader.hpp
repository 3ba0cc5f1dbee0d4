#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <vector>

#include "lexqa/text/analyzer.hpp"
#include "lexqa/text/segmenter.hpp"
#include "lexqa/text/token.hpp"

namespace lexqa::corpus {

struct CorpusOptions {
    text::SegmentMode mode = text::SegmentMode::rules;
    /// English filter: sentences with fewer stop-word tokens are skipped.
    int min_stopwords = 1;
};

struct CorpusStats {
    std::size_t sentences_read = 0;
    std::size_t sentences_kept = 0;
    std::size_t filtered_non_english = 0;
    std::size_t filtered_empty = 0;
    std::size_t invalid_utf8_spans = 0;
};

/// Streams plain-text input through segmentation, tokenization and the
/// English filter. Kept sentences get consecutive source ids.
class CorpusReader {
public:
    using Sink = std::function<void(text::Sentence)>;

    CorpusReader(const text::Analyzer& analyzer, CorpusOptions options)
        : analyzer_(&analyzer), options_(options)
    {}

    void read(std::istream& in, const Sink& sink);
    void read_file(const std::filesystem::path& path, const Sink& sink);

    /// Tokenize one sentence; returns false if it is filtered out.
    bool accept(std::string text, text::Sentence& out);

    const CorpusStats& stats() const { return stats_; }

private:
    const text::Analyzer* analyzer_;
    CorpusOptions options_;
    CorpusStats stats_;
    std::uint64_t next_id_ = 0;
};

/// Reads a whole corpus into memory.
std::vector<text::Sentence> read_corpus(std::istream& in, const text::Analyzer& analyzer,
    const CorpusOptions& options, CorpusStats* stats = nullptr);

}  // namespace lexqa::corpus
