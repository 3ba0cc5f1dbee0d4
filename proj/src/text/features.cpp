#include "lexqa/text/features.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace lexqa::text {

FeatureId FeatureId::unigram(std::string_view stem)
{
    return FeatureId{FeatureKind::unigram, std::string(stem)};
}

FeatureId FeatureId::ngram(const std::vector<std::string_view>& stems)
{
    if (stems.empty() || stems.size() > 3) {
        throw std::invalid_argument("n-gram length must be 1..3");
    }
    std::string key(stems.front());
    for (std::size_t i = 1; i < stems.size(); ++i) {
        key.push_back(kNgramSeparator);
        key.append(stems[i]);
    }
    return FeatureId{static_cast<FeatureKind>(stems.size()), std::move(key)};
}

FeatureId FeatureId::conjunction(std::string_view a, std::string_view b)
{
    if (b < a) std::swap(a, b);
    std::string key;
    key.reserve(a.size() + b.size() + 1);
    key.append(a);
    key.push_back(kConjunctionSeparator);
    key.append(b);
    return FeatureId{FeatureKind::conjunction, std::move(key)};
}

FeatureId FeatureId::from_key(std::string_view key)
{
    if (key.find(kConjunctionSeparator) != std::string_view::npos) {
        return FeatureId{FeatureKind::conjunction, std::string(key)};
    }
    auto n = 1 + std::count(key.begin(), key.end(), kNgramSeparator);
    if (n > 3) throw std::invalid_argument("bad feature key: " + std::string(key));
    return FeatureId{static_cast<FeatureKind>(n), std::string(key)};
}

void normalize(FeatureSet& set)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

FeatureSet set_union(const FeatureSet& a, const FeatureSet& b)
{
    FeatureSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

// Appends the n-grams of tokens[begin, end).
void append_ngrams(const TokenList& tokens, std::size_t begin, std::size_t end, int max_n,
    FeatureSet& out)
{
    std::vector<std::string_view> parts;
    for (std::size_t i = begin; i < end; ++i) {
        for (int n = 1; n <= max_n && i + static_cast<std::size_t>(n) <= end; ++n) {
            bool all_stop = true;
            parts.clear();
            for (int k = 0; k < n; ++k) {
                const auto& tok = tokens[i + static_cast<std::size_t>(k)];
                all_stop = all_stop && tok.is_stop;
                parts.push_back(tok.stem);
            }
            if (all_stop) continue;
            out.push_back(FeatureId::ngram(parts));
        }
    }
}

}  // namespace

FeatureSet extract_ngrams(const TokenList& tokens, int max_n)
{
    if (max_n < 1 || max_n > 3) throw std::invalid_argument("max_n must be 1..3");
    FeatureSet out;
    append_ngrams(tokens, 0, tokens.size(), max_n, out);
    normalize(out);
    return out;
}

FeatureSet extract_conjunctions(const TokenList& tokens, const ConjunctionOptions& opts)
{
    if (opts.window < 1) throw std::invalid_argument("conjunction window must be >= 1");
    struct Item {
        std::string_view stem;
        long position;
    };
    std::vector<Item> items;
    long counted = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i].is_stop) {
            if (opts.count_stopwords) ++counted;
            continue;
        }
        items.push_back({tokens[i].stem, counted});
        ++counted;
    }
    FeatureSet out;
    for (std::size_t a = 0; a < items.size(); ++a) {
        for (std::size_t b = a + 1; b < items.size(); ++b) {
            if (items[b].position - items[a].position > opts.window) break;
            if (items[a].stem == items[b].stem) continue;
            out.push_back(FeatureId::conjunction(items[a].stem, items[b].stem));
        }
    }
    normalize(out);
    return out;
}

FeatureSet extract_context(const TokenList& tokens, std::size_t position, int window)
{
    if (window < 1) throw std::invalid_argument("context window must be >= 1");
    if (position >= tokens.size()) throw std::out_of_range("context position out of range");
    FeatureSet out;
    auto w = static_cast<std::size_t>(window);
    std::size_t left = position >= w ? position - w : 0;
    std::size_t right = std::min(tokens.size(), position + w + 1);
    append_ngrams(tokens, left, position, 3, out);
    append_ngrams(tokens, position + 1, right, 3, out);
    normalize(out);
    return out;
}

}  // namespace lexqa::text
