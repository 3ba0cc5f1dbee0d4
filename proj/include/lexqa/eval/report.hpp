#pragma once

#include <ostream>

#include <json.hpp>

#include "lexqa/eval/evaluation.hpp"

namespace lexqa::eval {

nlohmann::json report_to_json(const EvalReport& report);
nlohmann::json comparison_to_json(const ComparisonReport& report);

void print_report(std::ostream& out, const EvalReport& report);
/// `title` names the row column, e.g. "ablated" or "beam".
void print_comparison(std::ostream& out, const ComparisonReport& report, const char* title);

}  // namespace lexqa::eval
