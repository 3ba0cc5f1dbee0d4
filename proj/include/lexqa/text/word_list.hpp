#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>

namespace lexqa::text {

/// A set of lowercase words loaded from a one-word-per-line file.
/// Blank lines and lines starting with '#' are ignored.
class WordList {
public:
    WordList() = default;

    static WordList parse(std::string_view text);
    static WordList read(std::istream& in);
    static WordList load(const std::filesystem::path& path);

    /// The SMART stop word list shipped in data/smart_stopwords.txt.
    static const WordList& smart_stopwords();
    /// Abbreviations that do not end a sentence (data/abbreviations.txt).
    static const WordList& default_abbreviations();

    bool contains(std::string_view word) const
    {
        return words_.find(std::string(word)) != words_.end();
    }
    std::size_t size() const { return words_.size(); }
    void insert(std::string word);

private:
    std::unordered_set<std::string> words_;
};

namespace detail {
extern const char* const kSmartStopwords;
extern const char* const kDefaultAbbreviations;
}  // namespace detail

}  // namespace lexqa::text
