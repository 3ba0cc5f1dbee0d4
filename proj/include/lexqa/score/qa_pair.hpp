#pragma once

#include <map>
#include <string>
#include <vector>

#include "lexqa/text/features.hpp"
#include "lexqa/text/token.hpp"

namespace lexqa::score {

using text::FeatureSet;

/// A question and one candidate answer, tokenized separately, with every
/// feature bundle the scoring steps need.
struct QAPair {
    text::TokenList question;
    text::TokenList answer;

    FeatureSet unigrams;      // non-stop stems of q and a
    FeatureSet conjunctions;  // in-sentence pairs plus q x a pairs
    FeatureSet ngrams;        // {1,2,3}-grams of q and of a

    /// Distinct non-stop stems of the pair, sorted; the scorer's word set.
    std::vector<std::string> words;
    std::vector<FeatureSet> contexts;  // parallel to `words`
    std::vector<bool> in_question;     // parallel to `words`
    std::vector<bool> in_answer;       // parallel to `words`

    /// Index of `stem` in `words`, or words.size().
    std::size_t word_index(const std::string& stem) const;
};

struct QAOptions {
    text::ConjunctionOptions conjunctions{};
    int context_window = 3;
};

QAPair make_qa_pair(text::TokenList question, text::TokenList answer, const QAOptions& options = {});

}  // namespace lexqa::score
