#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "lexqa/corpus/term_bank.hpp"
#include "lexqa/text/token.hpp"

namespace lexqa::corpus {

enum class MatchMode {
    surface,  // lowercased surface tokens
    stemmed,  // Porter stems
};

/// True iff `phrase` occurs as a contiguous run of the sentence's
/// lowercased surface tokens.
bool match_term(const text::Sentence& sentence, const std::vector<std::string>& phrase);
bool match_term(const text::Sentence& sentence, const Term& term, MatchMode mode);

struct PseudoDocument {
    TermId term_id = 0;
    std::string phrase;
    std::vector<text::Sentence> sentences;
};

struct DroppedTerm {
    TermId term_id = 0;
    std::size_t matches = 0;
};

struct PseudoDocOptions {
    std::size_t min_sentences = 10;
    std::size_t cap = 50000;
    MatchMode match = MatchMode::surface;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::size_t batch_size = 4096;
};

struct PseudoDocSet {
    std::vector<PseudoDocument> documents;  // ascending term id
    std::vector<DroppedTerm> dropped;
    std::vector<std::string> warnings;
    std::size_t sentences_scanned = 0;
};

/// Pulls sentences until the source returns false.
using SentenceSource = std::function<bool(text::Sentence&)>;

/// Streams the corpus once and groups matching sentences per term. Batches
/// are matched in parallel and merged in corpus order, so the first `cap`
/// matches (by position) are kept regardless of thread count.
PseudoDocSet build_pseudo_documents(const SentenceSource& source, const TermBank& bank,
    const PseudoDocOptions& options = {});

PseudoDocSet build_pseudo_documents(const std::vector<text::Sentence>& corpus,
    const TermBank& bank, const PseudoDocOptions& options = {});

/// Writes `term_<id>.txt` (one sentence per line) and `manifest.tsv`
/// (term_id, phrase, sentence count) into `dir`.
void save_pseudo_documents(const PseudoDocSet& set, const std::filesystem::path& dir);

/// Reads a directory written by `save_pseudo_documents`, re-tokenizing each line.
PseudoDocSet load_pseudo_documents(const std::filesystem::path& dir,
    const text::Analyzer& analyzer);

/// Reads a single `term_<id>.txt` file.
PseudoDocument load_pseudo_document(const std::filesystem::path& dir, TermId id,
    const text::Analyzer& analyzer);

}  // namespace lexqa::corpus
