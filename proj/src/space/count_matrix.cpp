#include "lexqa/space/count_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexqa::space {

CountMatrix CountMatrix::build(const std::vector<RawRow>& rows)
{
    std::vector<FeatureId> all;
    for (const auto& row : rows) {
        for (const auto& [f, tf] : row) {
            if (tf > 0) all.push_back(f);
        }
    }
    text::normalize(all);
    FeatureDictionary dictionary(std::move(all));

    std::vector<std::vector<CountEntry>> entries(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        entries[r].reserve(rows[r].size());
        for (const auto& [f, tf] : rows[r]) {
            if (tf > 0) entries[r].push_back({*dictionary.find(f), tf});
        }
    }
    return build(std::move(dictionary), std::move(entries));
}

CountMatrix CountMatrix::build(FeatureDictionary dictionary, std::vector<std::vector<CountEntry>> rows)
{
    CountMatrix m;
    m.dictionary_ = std::move(dictionary);
    m.rows_ = std::move(rows);
    m.finalize();
    return m;
}

void CountMatrix::finalize()
{
    df_.assign(dictionary_.size(), 0);
    row_max_logtf_.assign(rows_.size(), 0.0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& row = rows_[r];
        std::erase_if(row, [](const CountEntry& e) { return e.tf == 0; });
        std::sort(row.begin(), row.end(),
            [](const CountEntry& a, const CountEntry& b) { return a.feature < b.feature; });
        std::uint32_t max_tf = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].feature >= dictionary_.size()) throw std::out_of_range("feature id out of range");
            if (i > 0 && row[i].feature == row[i - 1].feature) {
                throw std::invalid_argument("duplicate feature in matrix row");
            }
            ++df_[row[i].feature];
            max_tf = std::max(max_tf, row[i].tf);
        }
        row_max_logtf_[r] = max_tf > 0 ? log_count(max_tf) : 0.0;
    }
    std::uint32_t max_df = 0;
    for (auto d : df_) max_df = std::max(max_df, d);
    max_logdf_ = max_df > 0 ? log_count(max_df) : 0.0;
}

std::uint32_t CountMatrix::tf(std::size_t r, std::uint32_t feature) const
{
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), feature,
        [](const CountEntry& e, std::uint32_t f) { return e.feature < f; });
    return it != row.end() && it->feature == feature ? it->tf : 0;
}

double CountMatrix::weight(std::size_t r, const CountEntry& entry, Weighting kind) const
{
    double w = tfidf_weight(entry.tf, row_max_logtf_[r], df_[entry.feature], max_logdf_);
    return kind == Weighting::binary ? binarize(w) : w;
}

double CountMatrix::weight(std::size_t r, std::uint32_t feature, Weighting kind) const
{
    std::uint32_t count = tf(r, feature);
    if (count == 0) return 0.0;
    return weight(r, CountEntry{feature, count}, kind);
}

SparseVector CountMatrix::row_vector(std::size_t r, Weighting kind) const
{
    std::vector<SparseVector::Entry> entries;
    entries.reserve(rows_[r].size());
    for (const auto& e : rows_[r]) {
        double w = weight(r, e, kind);
        if (w > 0.0) entries.emplace_back(dictionary_[e.feature], w);
    }
    return SparseVector::from_entries(std::move(entries), kind);
}

double CountMatrix::dot(std::size_t r, std::span<const std::uint32_t> query, Weighting kind) const
{
    const auto& row = rows_[r];
    double sum = 0.0;
    auto it = row.begin();
    for (std::uint32_t f : query) {
        it = std::lower_bound(it, row.end(), f,
            [](const CountEntry& e, std::uint32_t key) { return e.feature < key; });
        if (it == row.end()) break;
        if (it->feature == f) sum += weight(r, *it, kind);
    }
    return sum;
}

}  // namespace lexqa::space
