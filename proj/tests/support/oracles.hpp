#pragma once

// Brute-force reference computations used to check the engine. Nothing here
// calls into the library's feature extraction, weighting or scoring code; only
// token lists and plain containers cross the boundary.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/text/features.hpp"
#include "lexqa/text/token.hpp"

namespace oracle {

/// (kind, key) with kind 1..3 for n-grams and 4 for conjunctions, ordered like
/// the engine's feature ids.
using Key = std::pair<int, std::string>;
using KeySet = std::set<Key>;
using Counts = std::map<Key, std::uint32_t>;

KeySet to_keys(const lexqa::text::FeatureSet& set);

/// log10 built from natural logarithms: TF * IDF as a ratio of logs.
double tfidf(std::uint64_t tf, double row_max_logtf, std::uint64_t df, double global_max_logdf);

KeySet ngrams(const lexqa::text::TokenList& tokens, int max_n);
KeySet conjunctions(const lexqa::text::TokenList& tokens, int window);
KeySet context(const lexqa::text::TokenList& tokens, std::size_t position, int window);
KeySet cross_pairs(const lexqa::text::TokenList& question, const lexqa::text::TokenList& answer);

/// A counted matrix with derived statistics, keyed by row name.
struct Matrix {
    std::map<std::string, Counts> rows;
    std::map<Key, std::uint32_t> df;
    std::map<std::string, double> row_max_logtf;
    double max_logdf = 0.0;

    void finish();
    double weight(const std::string& row, const Key& f) const;
    std::uint32_t tf(const std::string& row, const Key& f) const;
};

/// Rows keyed by the decimal term id.
Matrix terminology(const std::vector<lexqa::corpus::PseudoDocument>& docs, std::uint32_t min_support,
    int conj_window);
Matrix word_space(const lexqa::corpus::PseudoDocument& doc, int window, std::uint32_t min_occurrences);
std::vector<KeySet> sentence_rows(const lexqa::corpus::PseudoDocument& doc);

/// max over subsets u of the words (|u| <= m, all 2^n subsets enumerated) of
/// |c(u) & sentence| / |c(u)| * |u| / m.
double best_subset(const std::vector<KeySet>& word_contexts, const KeySet& sentence, std::size_t m);

double top_k_mean(std::vector<double> values, std::size_t k);

/// Two-sided Fisher test by enumerating all tables with the observed margins,
/// probabilities from a Pascal-triangle binomial table.
double fisher_enumerate(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

}  // namespace oracle
