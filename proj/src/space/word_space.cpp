#include "lexqa/space/word_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lexqa::space {

WordSpace::WordSpace(corpus::TermId term_id, std::vector<std::string> stems, CountMatrix matrix)
    : term_id_(term_id), stems_(std::move(stems)), matrix_(std::move(matrix))
{
    if (stems_.size() != matrix_.rows()) throw std::invalid_argument("word space row count mismatch");
    for (std::size_t i = 0; i < stems_.size(); ++i) {
        if (i > 0 && !(stems_[i - 1] < stems_[i])) throw std::invalid_argument("word rows must be sorted");
        row_index_.emplace(stems_[i], static_cast<std::uint32_t>(i));
    }
}

std::size_t WordSpace::row_of(const std::string& stem) const
{
    auto it = row_index_.find(stem);
    return it == row_index_.end() ? stems_.size() : it->second;
}

WordSpace build_word_space(const corpus::PseudoDocument& doc, const WordSpaceOptions& options,
    std::vector<std::string>* warnings)
{
    std::unordered_map<std::string, std::uint32_t> occurrences;
    for (const auto& s : doc.sentences) {
        for (const auto& t : s.tokens) {
            if (!t.is_stop) ++occurrences[t.stem];
        }
    }
    std::vector<std::string> stems;
    for (const auto& [stem, n] : occurrences) {
        if (n >= options.min_occurrences) stems.push_back(stem);
    }
    std::sort(stems.begin(), stems.end());
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < stems.size(); ++i) row_of.emplace(stems[i], i);

    std::vector<std::unordered_map<FeatureId, std::uint32_t, text::FeatureIdHash>> counts(stems.size());
    for (const auto& s : doc.sentences) {
        for (std::size_t pos = 0; pos < s.tokens.size(); ++pos) {
            const auto& t = s.tokens[pos];
            if (t.is_stop) continue;
            auto it = row_of.find(t.stem);
            if (it == row_of.end()) continue;
            for (auto& f : text::extract_context(s.tokens, pos, options.window)) {
                ++counts[it->second][std::move(f)];
            }
        }
    }
    std::vector<CountMatrix::RawRow> rows(stems.size());
    for (std::size_t i = 0; i < stems.size(); ++i) {
        rows[i].assign(counts[i].begin(), counts[i].end());
    }
    if (stems.empty() && warnings) {
        warnings->push_back("term " + std::to_string(doc.term_id) + " has no qualifying words; word space is empty");
    }
    return WordSpace(doc.term_id, std::move(stems), CountMatrix::build(rows));
}

std::map<std::string, FeatureSet> qa_word_contexts(const text::TokenList& question,
    const text::TokenList& answer, int window)
{
    std::map<std::string, FeatureSet> out;
    for (const auto* side : {&question, &answer}) {
        for (std::size_t pos = 0; pos < side->size(); ++pos) {
            const auto& t = (*side)[pos];
            if (t.is_stop) continue;
            auto& ctx = out[t.stem];
            ctx = text::set_union(ctx, text::extract_context(*side, pos, window));
        }
    }
    return out;
}

}  // namespace lexqa::space
