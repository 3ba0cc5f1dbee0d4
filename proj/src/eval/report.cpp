#include "lexqa/eval/report.hpp"

#include <cstdio>

namespace lexqa::eval {

nlohmann::json report_to_json(const EvalReport& report)
{
    nlohmann::json marks = nlohmann::json::object();
    for (const auto& q : report.questions) marks[q.id] = q.mark;
    return {{"questions", report.questions.size()}, {"accuracy", report.accuracy},
        {"correct", report.correct_count()}, {"mean_seconds", report.mean_seconds},
        {"p95_seconds", report.p95_seconds}, {"config", report.config}, {"marks", marks}};
}

nlohmann::json comparison_to_json(const ComparisonReport& report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"label", r.label}, {"accuracy", r.report.accuracy}, {"delta", r.delta},
            {"p_value", r.p_value}, {"mean_seconds", r.report.mean_seconds},
            {"p95_seconds", r.report.p95_seconds}});
    }
    return {{"baseline", report_to_json(report.baseline)}, {"rows", rows}};
}

void print_report(std::ostream& out, const EvalReport& report)
{
    char line[160];
    std::snprintf(line, sizeof line, "questions  %zu\naccuracy   %.4f (%zu correct)\nsec/q      %.4f mean, %.4f p95\n",
        report.questions.size(), report.accuracy, report.correct_count(), report.mean_seconds,
        report.p95_seconds);
    out << line;
}

void print_comparison(std::ostream& out, const ComparisonReport& report, const char* title)
{
    char line[160];
    std::snprintf(line, sizeof line, "%-12s %9s %9s %9s %9s\n", title, "accuracy", "delta", "p", "sec/q");
    out << line;
    std::snprintf(line, sizeof line, "%-12s %9.4f %9.4f %9s %9.4f\n", "(baseline)", report.baseline.accuracy,
        0.0, "-", report.baseline.mean_seconds);
    out << line;
    for (const auto& r : report.rows) {
        std::snprintf(line, sizeof line, "%-12s %9.4f %+9.4f %9.4f %9.4f\n", r.label.c_str(),
            r.report.accuracy, r.delta, r.p_value, r.report.mean_seconds);
        out << line;
    }
}

}  // namespace lexqa::eval
