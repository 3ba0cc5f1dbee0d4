#include "lexqa/eval/evaluation.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>

#include "lexqa/eval/fisher.hpp"
#include "lexqa/parallel.hpp"

namespace lexqa::eval {

double mark(const Question& question, const std::vector<std::size_t>& best)
{
    if (best.empty()) return 0.0;
    if (std::find(best.begin(), best.end(), question.answer_key) == best.end()) return 0.0;
    return 1.0 / static_cast<double>(best.size());
}

std::size_t EvalReport::correct_count() const
{
    double sum = 0.0;
    for (const auto& q : questions) sum += q.mark;
    return static_cast<std::size_t>(std::llround(sum));
}

namespace {

std::string mask_string(const score::AblationMask& mask)
{
    std::string s;
    for (std::size_t i = 0; i < score::kSubscoreCount; ++i) s.push_back(mask.enabled(i) ? '1' : '0');
    return s;
}

}  // namespace

EvalReport run_evaluation(const std::vector<Question>& questions, const space::SpaceProvider& spaces,
    const text::Analyzer& analyzer, const EvalOptions& options)
{
    options.beam.validate();
    EvalReport report;
    report.config = options.config;
    report.config["step1_keep"] = std::to_string(options.beam.step1_keep);
    report.config["step2_keep"] = std::to_string(options.beam.step2_keep);
    report.config["step3_keep"] = std::to_string(options.beam.step3_keep);
    report.config["k"] = std::to_string(options.beam.k_sentences);
    report.config["m"] = std::to_string(options.beam.m_subset);
    report.config["subset_candidate_cap"] = std::to_string(options.beam.subset_candidate_cap);
    report.config["mask"] = mask_string(options.mask);

    report.questions.resize(questions.size());
    parallel_for(questions.size(), options.threads, [&](std::size_t i) {
        const auto& q = questions[i];
        auto start = std::chrono::steady_clock::now();
        auto stem = analyzer.tokenize(q.text);
        std::vector<text::TokenList> choices;
        for (const auto& c : q.choices) choices.push_back(analyzer.tokenize(c));
        auto result = score::answer_question(stem, choices, spaces, options.beam, options.mask);
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        auto& out = report.questions[i];
        out.id = q.id;
        out.best = result.best;
        out.mark = mark(q, result.best);
        out.seconds = elapsed;
        if (options.keep_breakdowns) out.breakdowns = std::move(result.breakdowns);
    });

    if (!questions.empty()) {
        double marks = 0.0;
        double seconds = 0.0;
        std::vector<double> times;
        for (const auto& q : report.questions) {
            marks += q.mark;
            seconds += q.seconds;
            times.push_back(q.seconds);
        }
        const double n = static_cast<double>(questions.size());
        report.accuracy = marks / n;
        report.mean_seconds = seconds / n;
        std::sort(times.begin(), times.end());
        auto idx = static_cast<std::size_t>(std::ceil(0.95 * n)) - 1;
        report.p95_seconds = times[std::min(idx, times.size() - 1)];
    }
    return report;
}

double fisher_between(const EvalReport& x, const EvalReport& y)
{
    auto nx = x.questions.size();
    auto ny = y.questions.size();
    auto cx = x.correct_count();
    auto cy = y.correct_count();
    return fisher_exact_2x2(cx, nx - cx, cy, ny - cy);
}

ComparisonReport run_ablation(const std::vector<Question>& questions, const space::SpaceProvider& spaces,
    const text::Analyzer& analyzer, const EvalOptions& options)
{
    ComparisonReport out;
    auto base_opts = options;
    base_opts.mask = score::AblationMask::all();
    out.baseline = run_evaluation(questions, spaces, analyzer, base_opts);
    for (std::size_t i = 0; i < score::kSubscoreCount; ++i) {
        auto opts = options;
        opts.mask = score::AblationMask::without(i);
        ComparisonRow row;
        row.label = score::kSubscoreLabels[i];
        row.report = run_evaluation(questions, spaces, analyzer, opts);
        row.delta = row.report.accuracy - out.baseline.accuracy;
        row.p_value = fisher_between(out.baseline, row.report);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<score::BeamConfig> default_sweep(const score::BeamConfig& base)
{
    std::vector<score::BeamConfig> rows;
    for (auto [a, b, c] : {std::array<std::size_t, 3>{5, 2, 1}, {10, 4, 1}, {20, 8, 2}, {40, 16, 4}}) {
        auto cfg = base;
        cfg.step1_keep = a;
        cfg.step2_keep = b;
        cfg.step3_keep = c;
        rows.push_back(cfg);
    }
    return rows;
}

ComparisonReport run_sweep(const std::vector<Question>& questions, const space::SpaceProvider& spaces,
    const text::Analyzer& analyzer, const EvalOptions& options, const std::vector<score::BeamConfig>& rows)
{
    ComparisonReport out;
    out.baseline = run_evaluation(questions, spaces, analyzer, options);
    for (const auto& beam : rows) {
        auto opts = options;
        opts.beam = beam;
        ComparisonRow row;
        row.label = std::to_string(beam.step1_keep) + "/" + std::to_string(beam.step2_keep) + "/"
            + std::to_string(beam.step3_keep) + "/1";
        row.report = run_evaluation(questions, spaces, analyzer, opts);
        row.delta = row.report.accuracy - out.baseline.accuracy;
        row.p_value = fisher_between(out.baseline, row.report);
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace lexqa::eval
