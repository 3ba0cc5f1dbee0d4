#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lexqa/space/sparse_vector.hpp"
#include "lexqa/space/weighting.hpp"

namespace lexqa::space {

struct CountEntry {
    std::uint32_t feature = 0;
    std::uint32_t tf = 0;

    friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

/// Rows of raw feature counts plus the statistics needed to derive
/// tf-idf and binary weights on demand.
class CountMatrix {
public:
    using RawRow = std::vector<std::pair<FeatureId, std::uint32_t>>;

    CountMatrix() = default;

    /// Features are numbered in sorted order; zero counts are dropped.
    static CountMatrix build(const std::vector<RawRow>& rows);
    /// Same, but against a fixed dictionary (used when loading from disk).
    static CountMatrix build(FeatureDictionary dictionary,
        std::vector<std::vector<CountEntry>> rows);

    std::size_t rows() const { return rows_.size(); }
    const FeatureDictionary& features() const { return dictionary_; }
    std::span<const CountEntry> row(std::size_t r) const { return rows_[r]; }
    std::uint32_t df(std::uint32_t feature) const { return df_[feature]; }
    double row_max_logtf(std::size_t r) const { return row_max_logtf_[r]; }
    double max_logdf() const { return max_logdf_; }

    /// 0 when absent.
    std::uint32_t tf(std::size_t r, std::uint32_t feature) const;
    double weight(std::size_t r, const CountEntry& entry, Weighting kind) const;
    double weight(std::size_t r, std::uint32_t feature, Weighting kind) const;
    SparseVector row_vector(std::size_t r, Weighting kind) const;

    /// Sum of row weights over `query` (feature ids sorted ascending),
    /// accumulated in query order.
    double dot(std::size_t r, std::span<const std::uint32_t> query, Weighting kind) const;

private:
    void finalize();

    FeatureDictionary dictionary_;
    std::vector<std::vector<CountEntry>> rows_;
    std::vector<std::uint32_t> df_;
    std::vector<double> row_max_logtf_;
    double max_logdf_ = 0.0;
};

}  // namespace lexqa::space
