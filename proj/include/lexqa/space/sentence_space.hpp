#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/space/sparse_vector.hpp"

namespace lexqa::space {

/// Binary sentences x {1,2,3}-gram matrix with an inverted index.
class SentenceSpace {
public:
    SentenceSpace() = default;

    corpus::TermId term_id() const { return term_id_; }
    std::size_t size() const { return rows_.size(); }
    const FeatureDictionary& features() const { return dictionary_; }
    /// Sorted feature ids of sentence `row`.
    std::span<const std::uint32_t> row(std::size_t r) const { return rows_[r]; }
    std::span<const std::uint32_t> postings(std::uint32_t feature) const { return postings_[feature]; }
    const std::string& text(std::size_t r) const { return texts_[r]; }
    SparseVector row_vector(std::size_t r) const;

    friend SentenceSpace build_sentence_space(const corpus::PseudoDocument& doc);

private:
    corpus::TermId term_id_ = 0;
    FeatureDictionary dictionary_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::vector<std::uint32_t>> postings_;
    std::vector<std::string> texts_;
};

SentenceSpace build_sentence_space(const corpus::PseudoDocument& doc);

}  // namespace lexqa::space
