#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexqa/text/features.hpp"

namespace lexqa::space {

using text::FeatureId;
using text::FeatureSet;

enum class Weighting { tfidf, binary };

/// Feature -> weight map kept sorted by feature. Zero weights are never
/// stored; a binary vector holds only weight 1.
class SparseVector {
public:
    using Entry = std::pair<FeatureId, double>;

    explicit SparseVector(Weighting kind = Weighting::tfidf) : kind_(kind) {}

    static SparseVector binary(const FeatureSet& features);
    /// Entries may arrive unsorted; zero weights are skipped.
    static SparseVector from_entries(std::vector<Entry> entries, Weighting kind);

    Weighting kind() const { return kind_; }
    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    double weight(const FeatureId& f) const;
    double l1_norm() const;

private:
    Weighting kind_;
    std::vector<Entry> entries_;
};

/// Inner product of `row` with the binary vector `qa`, divided by |qa|_1.
/// Summation follows the feature order of `qa`. Returns 0 for an empty `qa`.
double overlap_score(const SparseVector& row, const SparseVector& qa);

/// Dense numbering of features; ids follow sorted feature order.
class FeatureDictionary {
public:
    FeatureDictionary() = default;
    /// `features` must be sorted and unique.
    explicit FeatureDictionary(std::vector<FeatureId> features);

    std::optional<std::uint32_t> find(const FeatureId& f) const;
    const FeatureId& operator[](std::uint32_t id) const { return features_[id]; }
    std::size_t size() const { return features_.size(); }
    const std::vector<FeatureId>& features() const { return features_; }

    /// Ids of the known members of `set`, in the same (sorted) order.
    std::vector<std::uint32_t> lookup(const FeatureSet& set) const;

private:
    std::vector<FeatureId> features_;
    std::unordered_map<FeatureId, std::uint32_t, text::FeatureIdHash> index_;
};

}  // namespace lexqa::space
