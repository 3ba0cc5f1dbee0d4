#pragma once

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "lexqa/text/word_list.hpp"

namespace lexqa::text {

enum class SegmentMode {
    rules,  // split on terminal punctuation
    lines,  // one sentence per input line
};

/// Streaming rule-based sentence splitter.
///
/// A sentence ends at `.`, `?` or `!` (plus any closing quotes or brackets)
/// when followed by whitespace and then an uppercase letter, a digit or an
/// opening quote. A period does not end a sentence when the word before it is
/// in the abbreviation list or is a single letter (initials). Blank lines
/// always end a sentence. Emitted text has whitespace collapsed to single
/// spaces, so each sentence fits on one line.
class SentenceSegmenter {
public:
    using Sink = std::function<void(std::string)>;

    explicit SentenceSegmenter(SegmentMode mode = SegmentMode::rules,
        const WordList& abbreviations = WordList::default_abbreviations());

    /// Feed one input line (without its newline).
    void feed_line(std::string_view line, const Sink& sink);
    /// Flush whatever is buffered.
    void finish(const Sink& sink);

    /// Number of ill-formed UTF-8 spans skipped so far.
    std::size_t invalid_utf8_spans() const { return invalid_utf8_; }

    /// Convenience: split a whole stream.
    std::vector<std::string> split(std::istream& in);
    std::vector<std::string> split(std::string_view text);

private:
    void drain(bool at_end, const Sink& sink);
    bool is_abbreviation(std::size_t period_pos) const;
    void emit(std::size_t end, const Sink& sink);

    SegmentMode mode_;
    const WordList* abbreviations_;
    std::string buffer_;
    std::size_t scan_ = 0;
    std::size_t invalid_utf8_ = 0;
};

}  // namespace lexqa::text
