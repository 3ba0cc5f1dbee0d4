#include "lexqa/space/sentence_space.hpp"

namespace lexqa::space {

SentenceSpace build_sentence_space(const corpus::PseudoDocument& doc)
{
    SentenceSpace space;
    space.term_id_ = doc.term_id;
    std::vector<FeatureSet> sets;
    sets.reserve(doc.sentences.size());
    FeatureSet all;
    for (const auto& s : doc.sentences) {
        sets.push_back(text::extract_ngrams(s.tokens, 3));
        all.insert(all.end(), sets.back().begin(), sets.back().end());
        space.texts_.push_back(s.text);
    }
    text::normalize(all);
    space.dictionary_ = FeatureDictionary(std::move(all));
    space.postings_.assign(space.dictionary_.size(), {});
    space.rows_.reserve(sets.size());
    for (std::size_t r = 0; r < sets.size(); ++r) {
        auto ids = space.dictionary_.lookup(sets[r]);
        for (auto f : ids) space.postings_[f].push_back(static_cast<std::uint32_t>(r));
        space.rows_.push_back(std::move(ids));
    }
    return space;
}

SparseVector SentenceSpace::row_vector(std::size_t r) const
{
    FeatureSet set;
    for (auto f : rows_[r]) set.push_back(dictionary_[f]);
    return SparseVector::binary(set);
}

}  // namespace lexqa::space
