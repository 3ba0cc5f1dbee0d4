#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lexqa/text/token.hpp"

namespace lexqa::text {

enum class FeatureKind : unsigned char { unigram = 1, bigram = 2, trigram = 3, conjunction = 4 };

/// Joins the stems of an n-gram. Never produced by the tokenizer.
inline constexpr char kNgramSeparator = '_';
/// Joins the two (sorted) stems of a conjunction.
inline constexpr char kConjunctionSeparator = '&';

/// A feature column identified by its canonical key, e.g. "plate",
/// "tecton_plate" or "boundari&earthquak".
struct FeatureId {
    FeatureKind kind = FeatureKind::unigram;
    std::string key;

    static FeatureId unigram(std::string_view stem);
    static FeatureId ngram(const std::vector<std::string_view>& stems);
    /// Components are put in alphabetical order.
    static FeatureId conjunction(std::string_view a, std::string_view b);
    /// Inverse of `key`: infers the kind from the separators.
    static FeatureId from_key(std::string_view key);

    friend auto operator<=>(const FeatureId&, const FeatureId&) = default;
    friend bool operator==(const FeatureId&, const FeatureId&) = default;
};

struct FeatureIdHash {
    std::size_t operator()(const FeatureId& f) const noexcept
    {
        return std::hash<std::string>{}(f.key) ^ static_cast<std::size_t>(f.kind);
    }
};

/// Sorted, duplicate-free list of features.
using FeatureSet = std::vector<FeatureId>;

void normalize(FeatureSet& set);
FeatureSet set_union(const FeatureSet& a, const FeatureSet& b);

/// Contiguous n-grams for n = 1..max_n. Unigrams skip stop words; longer
/// n-grams are kept unless every component is a stop word.
FeatureSet extract_ngrams(const TokenList& tokens, int max_n);

struct ConjunctionOptions {
    int window = 10;
    /// When false the distance is counted over non-stop tokens only.
    bool count_stopwords = true;
};

/// Pairs of distinct non-stop stems whose positions differ by at most the window.
FeatureSet extract_conjunctions(const TokenList& tokens, const ConjunctionOptions& opts);
inline FeatureSet extract_conjunctions(const TokenList& tokens, int window)
{
    return extract_conjunctions(tokens, ConjunctionOptions{window, true});
}

/// N-grams (n <= 3) lying entirely within `window` tokens left or right of
/// `position`, never including the token at `position` itself.
FeatureSet extract_context(const TokenList& tokens, std::size_t position, int window);

}  // namespace lexqa::text
