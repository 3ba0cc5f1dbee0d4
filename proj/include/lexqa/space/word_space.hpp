#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/space/count_matrix.hpp"

namespace lexqa::space {

struct WordSpaceOptions {
    int window = 3;
    std::uint32_t min_occurrences = 10;
};

/// Words x context n-grams for one term's pseudo-document.
class WordSpace {
public:
    WordSpace() = default;
    WordSpace(corpus::TermId term_id, std::vector<std::string> stems, CountMatrix matrix);

    corpus::TermId term_id() const { return term_id_; }
    std::size_t size() const { return stems_.size(); }
    const std::string& stem(std::size_t row) const { return stems_[row]; }
    const std::vector<std::string>& stems() const { return stems_; }
    /// Row index, or size() when the word has no row.
    std::size_t row_of(const std::string& stem) const;
    const CountMatrix& matrix() const { return matrix_; }

private:
    corpus::TermId term_id_ = 0;
    std::vector<std::string> stems_;  // sorted
    std::unordered_map<std::string, std::uint32_t> row_index_;
    CountMatrix matrix_;
};

WordSpace build_word_space(const corpus::PseudoDocument& doc, const WordSpaceOptions& options = {},
    std::vector<std::string>* warnings = nullptr);

/// Binary context of every non-stop stem in q and a. Contexts are taken
/// within q and within a separately and unioned over occurrences.
std::map<std::string, FeatureSet> qa_word_contexts(const text::TokenList& question,
    const text::TokenList& answer, int window = 3);

}  // namespace lexqa::space
