#include "lexqa/space/terminology_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "lexqa/parallel.hpp"

namespace lexqa::space {

TerminologySpace::TerminologySpace(std::vector<TermId> term_ids, CountMatrix matrix)
    : term_ids_(std::move(term_ids)), matrix_(std::move(matrix))
{
    if (term_ids_.size() != matrix_.rows()) throw std::invalid_argument("row count mismatch");
    if (!std::is_sorted(term_ids_.begin(), term_ids_.end())
        || std::adjacent_find(term_ids_.begin(), term_ids_.end()) != term_ids_.end()) {
        throw std::invalid_argument("terminology rows must have ascending unique term ids");
    }
    postings_.assign(matrix_.features().size(), {});
    for (std::size_t r = 0; r < matrix_.rows(); ++r) {
        for (const auto& e : matrix_.row(r)) {
            postings_[e.feature].push_back({static_cast<std::uint32_t>(r), e.tf});
        }
    }
    for (std::uint32_t f = 0; f < postings_.size(); ++f) {
        if (postings_[f].size() != matrix_.df(f)) throw std::logic_error("df/posting mismatch");
    }
}

std::size_t TerminologySpace::row_of(TermId id) const
{
    auto it = std::lower_bound(term_ids_.begin(), term_ids_.end(), id);
    return it != term_ids_.end() && *it == id ? static_cast<std::size_t>(it - term_ids_.begin())
                                              : term_ids_.size();
}

double TerminologySpace::weight(std::size_t row, const FeatureId& f, Weighting kind) const
{
    auto id = matrix_.features().find(f);
    return id ? matrix_.weight(row, *id, kind) : 0.0;
}

CountMatrix::RawRow count_terminology_features(const corpus::PseudoDocument& doc,
    const text::ConjunctionOptions& conjunctions)
{
    std::unordered_map<FeatureId, std::uint32_t, text::FeatureIdHash> counts;
    for (const auto& s : doc.sentences) {
        for (auto& f : text::extract_ngrams(s.tokens, 1)) ++counts[std::move(f)];
        for (auto& f : text::extract_conjunctions(s.tokens, conjunctions)) ++counts[std::move(f)];
    }
    CountMatrix::RawRow row(counts.begin(), counts.end());
    std::sort(row.begin(), row.end());
    return row;
}

TerminologySpace build_terminology_space(const std::vector<corpus::PseudoDocument>& docs,
    const TerminologyOptions& options, std::vector<std::string>* warnings)
{
    if (docs.empty()) throw std::invalid_argument("cannot build terminology space without pseudo-documents");
    std::vector<const corpus::PseudoDocument*> ordered;
    for (const auto& d : docs) ordered.push_back(&d);
    std::sort(ordered.begin(), ordered.end(),
        [](auto* a, auto* b) { return a->term_id < b->term_id; });

    std::vector<CountMatrix::RawRow> rows(ordered.size());
    parallel_for(ordered.size(), options.threads, [&](std::size_t i) {
        auto row = count_terminology_features(*ordered[i], options.conjunctions);
        std::erase_if(row, [&](const auto& e) { return e.second < options.min_support; });
        rows[i] = std::move(row);
    });

    std::vector<TermId> ids;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
        ids.push_back(ordered[i]->term_id);
        if (rows[i].empty() && warnings) {
            warnings->push_back("term " + std::to_string(ordered[i]->term_id)
                + " has no terminology features; keeping an empty row");
        }
    }
    return TerminologySpace(std::move(ids), CountMatrix::build(rows));
}

QAFeatures qa_features(const text::TokenList& question, const text::TokenList& answer,
    const text::ConjunctionOptions& conjunctions)
{
    QAFeatures out;
    auto q_uni = text::extract_ngrams(question, 1);
    auto a_uni = text::extract_ngrams(answer, 1);
    out.unigrams = text::set_union(q_uni, a_uni);

    FeatureSet conj = text::set_union(text::extract_conjunctions(question, conjunctions),
        text::extract_conjunctions(answer, conjunctions));
    for (const auto& x : q_uni) {
        for (const auto& y : a_uni) {
            if (x.key != y.key) conj.push_back(FeatureId::conjunction(x.key, y.key));
        }
    }
    text::normalize(conj);
    out.conjunctions = std::move(conj);
    return out;
}

}  // namespace lexqa::space
