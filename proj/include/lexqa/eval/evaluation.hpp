#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lexqa/eval/questions.hpp"
#include "lexqa/kv_file.hpp"
#include "lexqa/score/scorer.hpp"
#include "lexqa/text/analyzer.hpp"

namespace lexqa::eval {

/// 1/n when the key is among the n tied best choices, else 0.
double mark(const Question& question, const std::vector<std::size_t>& best);

struct QuestionResult {
    std::string id;
    double mark = 0.0;
    std::vector<std::size_t> best;
    double seconds = 0.0;
    std::vector<score::ScoreBreakdown> breakdowns;  // only when requested
};

struct EvalReport {
    std::vector<QuestionResult> questions;  // input order
    double accuracy = 0.0;                  // mean mark
    double mean_seconds = 0.0;
    double p95_seconds = 0.0;
    KeyValues config;

    /// Round(sum of marks): the "correct" count used for significance tests.
    std::size_t correct_count() const;
};

struct EvalOptions {
    score::BeamConfig beam{};
    score::AblationMask mask{};
    unsigned threads = 0;
    bool keep_breakdowns = false;
    KeyValues config;  // extra settings copied into the report
};

/// Scores every question (concurrently) over shared immutable spaces.
EvalReport run_evaluation(const std::vector<Question>& questions, const space::SpaceProvider& spaces,
    const text::Analyzer& analyzer, const EvalOptions& options);

struct ComparisonRow {
    std::string label;
    EvalReport report;
    double delta = 0.0;    // accuracy minus baseline accuracy
    double p_value = 1.0;  // Fisher exact, rows = systems, columns = correct / incorrect
};

struct ComparisonReport {
    EvalReport baseline;
    std::vector<ComparisonRow> rows;
};

/// Baseline plus the eight single-subscore ablations.
ComparisonReport run_ablation(const std::vector<Question>& questions, const space::SpaceProvider& spaces,
    const text::Analyzer& analyzer, const EvalOptions& options);

/// Beam schedules (5,2,1), (10,4,1), (20,8,2), (40,16,4).
std::vector<score::BeamConfig> default_sweep(const score::BeamConfig& base);

/// Baseline uses options.beam; each row replaces the three beam widths.
ComparisonReport run_sweep(const std::vector<Question>& questions, const space::SpaceProvider& spaces,
    const text::Analyzer& analyzer, const EvalOptions& options, const std::vector<score::BeamConfig>& rows);

double fisher_between(const EvalReport& x, const EvalReport& y);

}  // namespace lexqa::eval
