#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexqa/score/qa_pair.hpp"
#include "lexqa/space/space_store.hpp"

namespace lexqa::score {

using corpus::TermId;

inline constexpr std::size_t kSubscoreCount = 8;

/// Subscore slots, in pipeline order.
enum Subscore : std::size_t {
    tfidf_unigram = 0,      // 1.1
    tfidf_conjunction,      // 1.2
    binary_unigram,         // 2.1
    binary_conjunction,     // 2.2
    context_same_word,      // 3.1
    context_other_word,     // 3.2
    sentence_whole,         // 4.1
    sentence_subset,        // 4.2
};

inline constexpr std::array<const char*, kSubscoreCount> kSubscoreLabels{
    "1.1", "1.2", "2.1", "2.2", "3.1", "3.2", "4.1", "4.2"};

using Subscores = std::array<double, kSubscoreCount>;

struct BeamConfig {
    std::size_t step1_keep = 10;
    std::size_t step2_keep = 4;
    std::size_t step3_keep = 1;
    std::size_t k_sentences = 5;
    std::size_t m_subset = 6;
    std::size_t subset_candidate_cap = 12;

    /// Throws std::invalid_argument unless all positive and non-increasing.
    void validate() const;
};

class AblationMask {
public:
    AblationMask() { enabled_.fill(true); }

    static AblationMask all() { return {}; }
    static AblationMask without(std::size_t subscore);

    bool enabled(std::size_t i) const { return enabled_[i]; }
    void set(std::size_t i, bool on);
    std::size_t count() const;

    /// Mean of the enabled subscores among the first `upto`; 0 if none.
    double mean(const Subscores& s, std::size_t upto = kSubscoreCount) const;

private:
    std::array<bool, kSubscoreCount> enabled_{};
};

struct TermScore {
    TermId term = 0;
    Subscores sub{};
    double mean = 0.0;  // ranking key of the step that produced it
};

struct ScoreBreakdown {
    std::size_t choice_index = 0;
    std::optional<TermId> selected_term;
    Subscores subscores{};
    double final_score = 0.0;
    /// Ranked survivors after steps 1, 2, 3 and the final pick.
    std::array<std::vector<TermScore>, 4> beam;
};

/// score(row) = row . qa / |qa|_1 over id-mapped features; 0 for empty qa.
double overlap(const space::CountMatrix& m, std::size_t row, std::span<const std::uint32_t> qa_ids,
    std::size_t qa_size, space::Weighting kind);

/// Tf-idf terminology match over every term sharing a feature with the pair;
/// the beam is topped up with zero-score terms in id order so the result is
/// the prefix of a full scan.
std::vector<TermScore> step1(const QAPair& qa, const space::TerminologySpace& terms,
    const BeamConfig& cfg, const AblationMask& mask = {});

std::vector<TermScore> step2(std::vector<TermScore> survivors, const QAPair& qa,
    const space::TerminologySpace& terms, const BeamConfig& cfg, const AblationMask& mask = {});

/// Same-word (3.1) and cross-word (3.2) context scores against one word space.
std::pair<double, double> word_context_scores(const QAPair& qa, const space::WordSpace& words);

std::vector<TermScore> step3(std::vector<TermScore> survivors, const QAPair& qa,
    const space::SpaceProvider& spaces, const BeamConfig& cfg, const AblationMask& mask = {});

/// Best subset-of-words context match against single sentences.
class SubsetMatcher {
public:
    SubsetMatcher(const QAPair& qa, const space::SentenceSpace& sentences, const BeamConfig& cfg);

    /// max over subsets u (|u| <= m) of overlap(sentence, c(u)) * |u| / m.
    double score(std::size_t sentence) const;
    /// Candidate words (indices into QAPair::words) searched for `sentence`.
    std::vector<std::size_t> candidates(std::size_t sentence) const;
    /// Sentences sharing at least one context feature with the pair.
    const std::vector<std::size_t>& touched() const { return touched_; }

private:
    using Bits = std::vector<std::uint64_t>;

    Bits sentence_bits(std::size_t sentence) const;

    const QAPair* qa_;
    const space::SentenceSpace* sentences_;
    std::size_t m_;
    std::size_t cap_;
    std::size_t words_;
    std::size_t blocks_;
    std::vector<Bits> word_bits_;                     // per QA word
    std::vector<std::pair<std::uint32_t, std::size_t>> universe_;  // dictionary id -> bit
    std::vector<std::size_t> touched_;
};

/// Mean of the k largest values, padding with zeros when fewer exist.
double top_k_mean(std::vector<double> scores, std::size_t k);

std::pair<double, double> step4(const QAPair& qa, const space::SentenceSpace& sentences,
    const BeamConfig& cfg);

ScoreBreakdown score_pair(const QAPair& qa, const space::SpaceProvider& spaces, const BeamConfig& cfg,
    const AblationMask& mask = {});

struct AnswerResult {
    std::vector<std::size_t> best;  // every choice tied at the maximum
    std::vector<ScoreBreakdown> breakdowns;
};

AnswerResult answer_question(const text::TokenList& question, const std::vector<text::TokenList>& choices,
    const space::SpaceProvider& spaces, const BeamConfig& cfg, const AblationMask& mask = {});

}  // namespace lexqa::score
