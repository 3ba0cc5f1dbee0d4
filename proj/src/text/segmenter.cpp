#include "lexqa/text/segmenter.hpp"

#include <cctype>
#include <sstream>

#include "lexqa/text/utf8.hpp"

namespace lexqa::text {

namespace {

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

bool is_terminal(char c)
{
    return c == '.' || c == '?' || c == '!';
}

// Closing quote or bracket at `i`; returns its byte length or 0.
std::size_t closer_length(std::string_view s, std::size_t i)
{
    char c = s[i];
    if (c == '"' || c == '\'' || c == ')' || c == ']') return 1;
    // U+201D and U+2019
    if (s.compare(i, 3, "\xE2\x80\x9D") == 0 || s.compare(i, 3, "\xE2\x80\x99") == 0) return 3;
    return 0;
}

bool opens_sentence(std::string_view s, std::size_t i)
{
    auto c = static_cast<unsigned char>(s[i]);
    if (std::isupper(c) || std::isdigit(c)) return true;
    if (c == '"' || c == '\'' || c == '(' || c == '[') return true;
    // U+201C and U+2018
    return s.compare(i, 3, "\xE2\x80\x9C") == 0 || s.compare(i, 3, "\xE2\x80\x98") == 0;
}

std::string collapse_whitespace(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : s) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

}  // namespace

SentenceSegmenter::SentenceSegmenter(SegmentMode mode, const WordList& abbreviations)
    : mode_(mode), abbreviations_(&abbreviations)
{}

void SentenceSegmenter::feed_line(std::string_view line, const Sink& sink)
{
    std::string clean = sanitize_utf8(line, invalid_utf8_);
    if (mode_ == SegmentMode::lines) {
        auto sentence = collapse_whitespace(clean);
        if (!sentence.empty()) sink(std::move(sentence));
        return;
    }
    if (collapse_whitespace(clean).empty()) {
        // paragraph break
        drain(true, sink);
        return;
    }
    if (!buffer_.empty()) buffer_.push_back(' ');
    buffer_ += clean;
    drain(false, sink);
}

void SentenceSegmenter::finish(const Sink& sink)
{
    if (mode_ == SegmentMode::rules) drain(true, sink);
}

bool SentenceSegmenter::is_abbreviation(std::size_t period_pos) const
{
    std::size_t begin = period_pos;
    while (begin > 0 && !is_space(buffer_[begin - 1])) --begin;
    std::string word;
    for (std::size_t i = begin; i < period_pos; ++i) {
        auto c = static_cast<unsigned char>(buffer_[i]);
        if (c == '(' || c == '"' || c == '\'' || c == '[') {
            if (word.empty()) continue;
        }
        word.push_back(static_cast<char>(std::tolower(c)));
    }
    if (word.empty()) return false;
    if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0]))) return true;
    return abbreviations_->contains(word);
}

void SentenceSegmenter::emit(std::size_t end, const Sink& sink)
{
    auto sentence = collapse_whitespace(std::string_view(buffer_).substr(0, end));
    buffer_.erase(0, end);
    scan_ = 0;
    if (!sentence.empty()) sink(std::move(sentence));
}

void SentenceSegmenter::drain(bool at_end, const Sink& sink)
{
    std::size_t i = scan_;
    while (i < buffer_.size()) {
        if (!is_terminal(buffer_[i])) {
            ++i;
            continue;
        }
        std::size_t end = i + 1;
        while (end < buffer_.size() && (is_terminal(buffer_[end]) || closer_length(buffer_, end) > 0)) {
            end += is_terminal(buffer_[end]) ? 1 : closer_length(buffer_, end);
        }
        std::size_t next = end;
        while (next < buffer_.size() && is_space(buffer_[next])) ++next;
        if (next == buffer_.size()) {
            // Cannot decide until more text arrives.
            break;
        }
        bool boundary = next > end && opens_sentence(buffer_, next);
        if (boundary && buffer_[i] == '.' && end == i + 1 && is_abbreviation(i)) boundary = false;
        if (boundary) {
            emit(end, sink);
            i = 0;
            continue;
        }
        i = end;
    }
    scan_ = i;
    if (at_end) emit(buffer_.size(), sink);
}

std::vector<std::string> SentenceSegmenter::split(std::istream& in)
{
    std::vector<std::string> out;
    auto sink = [&out](std::string s) { out.push_back(std::move(s)); };
    std::string line;
    while (std::getline(in, line)) feed_line(line, sink);
    finish(sink);
    return out;
}

std::vector<std::string> SentenceSegmenter::split(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return split(in);
}

}  // namespace lexqa::text
