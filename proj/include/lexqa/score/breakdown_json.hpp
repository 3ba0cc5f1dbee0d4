#pragma once

#include <string>

#include <json.hpp>

#include "lexqa/score/scorer.hpp"

namespace lexqa::score {

/// One JSON-lines record per (question, choice):
///   {"question_id": str, "choice_index": int, "selected_term": int|null,
///    "term_phrase": str, "subscores": {"1.1": x, ..., "4.2": x},
///    "final": x, "beam": [[{"term": id, "mean": x}, ...] x 4]}
nlohmann::json breakdown_to_json(const ScoreBreakdown& b, const std::string& question_id,
    const space::SpaceProvider* spaces = nullptr);

}  // namespace lexqa::score
