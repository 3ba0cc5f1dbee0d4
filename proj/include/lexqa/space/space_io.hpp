#pragma once

#include <cstdint>
#include <filesystem>

#include "lexqa/space/sentence_space.hpp"
#include "lexqa/space/terminology_space.hpp"
#include "lexqa/space/word_space.hpp"

// On-disk layout (format version 1). All text files are UTF-8 TSV.
//
//   terminology/manifest.txt   format, version, rows, features, global_max_logdf
//   terminology/terms.tsv      term_id <TAB> row_max_logtf, in row order
//   terminology/df.tsv         feature_key <TAB> df, in feature-id order
//   terminology/rows/<term_id>.tsv   feature_key <TAB> tf
//   terminology/postings.bin   see below
//
//   words/term_<id>/manifest.txt   format, version, term_id, rows, features, max_logdf
//   words/term_<id>/df.tsv         feature_key <TAB> df
//   words/term_<id>/stems.tsv      row words, in row order
//   words/term_<id>/rows.tsv       stem <TAB> feature_key <TAB> tf
//
//   sentences/term_<id>.manifest   format, version, term_id, rows, features
//
// postings.bin, little-endian:
//   char[4] "LQPL", u32 version, u32 feature_count,
//   then per feature (df.tsv order): u32 length, length x (u32 term_id, u32 tf).
//
// Feature keys: "stem" (unigram), "a_b" / "a_b_c" (bigram / trigram),
// "a&b" (conjunction, components sorted).

namespace lexqa::space {

inline constexpr int kSpaceFormatVersion = 1;

void save_terminology_space(const TerminologySpace& space, const std::filesystem::path& dir);
/// Validates df and postings against the rows; throws std::runtime_error on mismatch.
TerminologySpace load_terminology_space(const std::filesystem::path& dir);

void save_word_space(const WordSpace& space, const std::filesystem::path& dir);
WordSpace load_word_space(const std::filesystem::path& dir);

struct SentenceManifest {
    corpus::TermId term_id = 0;
    std::uint64_t rows = 0;
    std::uint64_t features = 0;
};

void save_sentence_manifest(const SentenceSpace& space, const std::filesystem::path& file);
SentenceManifest load_sentence_manifest(const std::filesystem::path& file);

}  // namespace lexqa::space
