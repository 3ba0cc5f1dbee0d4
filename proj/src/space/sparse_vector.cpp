#include "lexqa/space/sparse_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexqa::space {

SparseVector SparseVector::binary(const FeatureSet& features)
{
    SparseVector v(Weighting::binary);
    v.entries_.reserve(features.size());
    for (const auto& f : features) v.entries_.emplace_back(f, 1.0);
    std::sort(v.entries_.begin(), v.entries_.end(),
        [](const Entry& a, const Entry& b) { return a.first < b.first; });
    v.entries_.erase(std::unique(v.entries_.begin(), v.entries_.end(),
                         [](const Entry& a, const Entry& b) { return a.first == b.first; }),
        v.entries_.end());
    return v;
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries, Weighting kind)
{
    SparseVector v(kind);
    std::erase_if(entries, [](const Entry& e) { return e.second == 0.0; });
    std::sort(entries.begin(), entries.end(),
        [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].first == entries[i - 1].first) {
            throw std::invalid_argument("duplicate feature in sparse vector: " + entries[i].first.key);
        }
    }
    for (const auto& e : entries) {
        if (e.second < 0.0) throw std::invalid_argument("negative weight");
        if (kind == Weighting::binary && e.second != 1.0) {
            throw std::invalid_argument("binary vector with non-unit weight");
        }
    }
    v.entries_ = std::move(entries);
    return v;
}

double SparseVector::weight(const FeatureId& f) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), f,
        [](const Entry& e, const FeatureId& key) { return e.first < key; });
    return it != entries_.end() && it->first == f ? it->second : 0.0;
}

double SparseVector::l1_norm() const
{
    double sum = 0.0;
    for (const auto& e : entries_) sum += e.second;
    return sum;
}

double overlap_score(const SparseVector& row, const SparseVector& qa)
{
    if (qa.kind() != Weighting::binary) throw std::invalid_argument("QA vector must be binary");
    if (qa.empty()) return 0.0;
    double dot = 0.0;
    for (const auto& [f, w] : qa.entries()) dot += row.weight(f) * w;
    return dot / qa.l1_norm();
}

FeatureDictionary::FeatureDictionary(std::vector<FeatureId> features)
    : features_(std::move(features))
{
    index_.reserve(features_.size());
    for (std::size_t i = 0; i < features_.size(); ++i) {
        if (i > 0 && !(features_[i - 1] < features_[i])) {
            throw std::invalid_argument("feature dictionary must be sorted and unique");
        }
        index_.emplace(features_[i], static_cast<std::uint32_t>(i));
    }
}

std::optional<std::uint32_t> FeatureDictionary::find(const FeatureId& f) const
{
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::uint32_t> FeatureDictionary::lookup(const FeatureSet& set) const
{
    std::vector<std::uint32_t> out;
    out.reserve(set.size());
    for (const auto& f : set) {
        if (auto id = find(f)) out.push_back(*id);
    }
    return out;
}

}  // namespace lexqa::space
