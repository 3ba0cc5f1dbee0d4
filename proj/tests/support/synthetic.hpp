#pragma once

// Deterministic synthetic corpora with planted structure.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/eval/questions.hpp"
#include "lexqa/text/analyzer.hpp"

namespace synth {

/// Pronounceable made-up words that are their own Porter stem and are not
/// stop words, so feature keys are predictable.
class WordMaker {
public:
    explicit WordMaker(std::uint64_t seed) : rng_(seed) {}

    /// A fresh word; `first` forces the first letter when non-zero.
    std::string make(char first = 0);
    std::vector<std::string> make_many(std::size_t n, char first = 0);

private:
    std::mt19937_64 rng_;
    std::set<std::string> used_;
};

struct Topic {
    std::string term;
    std::vector<std::string> q_words;
    std::vector<std::string> a_words;
    std::vector<std::string> fillers;
};

struct TopicCorpus {
    std::vector<Topic> topics;
    std::vector<std::string> shared;     // fillers used by every topic
    std::vector<std::string> sentences;  // one sentence per entry, in corpus order
    std::vector<lexqa::eval::Question> questions;
};

/// Every sentence of topic j mentions its term, one or two of its question
/// words and one or two of its answer words within a few tokens of each
/// other. Questions name two question words (and the term); the key is two
/// answer words of the same topic, distractors are answer words of other
/// topics.
TopicCorpus make_topic_corpus(std::size_t topics, std::size_t sentences_per_topic,
    std::size_t questions_per_topic, std::uint64_t seed);

/// Questions that only the tf-idf conjunction subscore can separate: every
/// choice is one word with identical counts and contexts, and the key
/// co-occurs with the question words within the conjunction window in more
/// sentences than the distractors do.
TopicCorpus make_conjunction_suite(std::size_t questions, std::uint64_t seed);

/// Writes sentences as paragraphs of running text (for the segmenter).
std::string as_running_text(const std::vector<std::string>& sentences);

/// Pseudo-documents built by tokenizing `sentences` and grouping them by
/// the topic term they contain; ids follow topic order.
std::vector<lexqa::corpus::PseudoDocument> topic_documents(const TopicCorpus& corpus,
    const lexqa::text::Analyzer& analyzer);

/// Random token list drawn from `vocabulary` (stop words included).
lexqa::text::TokenList random_tokens(std::mt19937_64& rng, const std::vector<std::string>& vocabulary,
    std::size_t min_len, std::size_t max_len, const lexqa::text::Analyzer& analyzer);

/// Tokenized sentences drawn from `vocabulary`, each containing `term`.
lexqa::corpus::PseudoDocument random_document(std::mt19937_64& rng, std::uint32_t term_id,
    const std::string& term, const std::vector<std::string>& vocabulary, std::size_t sentences,
    const lexqa::text::Analyzer& analyzer);

}  // namespace synth
