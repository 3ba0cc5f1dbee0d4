#pragma once

#include <string>
#include <vector>

#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/space/count_matrix.hpp"
#include "lexqa/text/features.hpp"

namespace lexqa::space {

using corpus::TermId;

struct TerminologyOptions {
    std::uint32_t min_support = 10;
    text::ConjunctionOptions conjunctions{};
    unsigned threads = 0;
};

struct Posting {
    std::uint32_t row = 0;
    std::uint32_t tf = 0;

    friend bool operator==(const Posting&, const Posting&) = default;
};

/// Terms x (unigram + conjunction) features. Rows are ordered by term id.
class TerminologySpace {
public:
    TerminologySpace() = default;
    TerminologySpace(std::vector<TermId> term_ids, CountMatrix matrix);

    std::size_t size() const { return term_ids_.size(); }
    TermId term_id(std::size_t row) const { return term_ids_[row]; }
    const std::vector<TermId>& term_ids() const { return term_ids_; }
    /// Row of a term id, or size() when absent.
    std::size_t row_of(TermId id) const;

    const CountMatrix& matrix() const { return matrix_; }
    const FeatureDictionary& features() const { return matrix_.features(); }
    std::span<const Posting> postings(std::uint32_t feature) const { return postings_[feature]; }
    double global_max_logdf() const { return matrix_.max_logdf(); }

    double weight(std::size_t row, const FeatureId& f, Weighting kind) const;

private:
    std::vector<TermId> term_ids_;
    CountMatrix matrix_;
    std::vector<std::vector<Posting>> postings_;
};

/// Per-sentence feature counts for one pseudo-document, before thresholding.
CountMatrix::RawRow count_terminology_features(const corpus::PseudoDocument& doc,
    const text::ConjunctionOptions& conjunctions);

TerminologySpace build_terminology_space(const std::vector<corpus::PseudoDocument>& docs,
    const TerminologyOptions& options = {}, std::vector<std::string>* warnings = nullptr);

struct QAFeatures {
    FeatureSet unigrams;
    FeatureSet conjunctions;
};

/// Unigrams of q and a, their in-sentence conjunctions, and every
/// question-word x answer-word pair (no window).
QAFeatures qa_features(const text::TokenList& question, const text::TokenList& answer,
    const text::ConjunctionOptions& conjunctions);

}  // namespace lexqa::space
