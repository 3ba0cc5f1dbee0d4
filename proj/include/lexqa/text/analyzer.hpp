#pragma once

#include <string_view>

#include "lexqa/text/token.hpp"
#include "lexqa/text/word_list.hpp"

namespace lexqa::text {

/// Splits text into tokens, lowercases, stems and flags stop words.
///
/// A token is a maximal run of letters, digits and non-ASCII bytes; an
/// apostrophe between two such characters stays inside the token so that
/// contractions ("don't") can match the stop list. Everything else is a
/// boundary and is dropped.
class Analyzer {
public:
    Analyzer() : stopwords_(&WordList::smart_stopwords()) {}
    explicit Analyzer(const WordList& stopwords) : stopwords_(&stopwords) {}

    TokenList tokenize(std::string_view text) const;
    bool is_stopword(std::string_view lower) const { return stopwords_->contains(lower); }
    const WordList& stopwords() const { return *stopwords_; }

private:
    const WordList* stopwords_;
};

}  // namespace lexqa::text
