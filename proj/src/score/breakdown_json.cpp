#include "lexqa/score/breakdown_json.hpp"

namespace lexqa::score {

nlohmann::json breakdown_to_json(const ScoreBreakdown& b, const std::string& question_id,
    const space::SpaceProvider* spaces)
{
    nlohmann::json j;
    j["question_id"] = question_id;
    j["choice_index"] = b.choice_index;
    if (b.selected_term) {
        j["selected_term"] = *b.selected_term;
        j["term_phrase"] = spaces ? spaces->term_phrase(*b.selected_term) : std::string{};
    } else {
        j["selected_term"] = nullptr;
        j["term_phrase"] = "";
    }
    nlohmann::json subs = nlohmann::json::object();
    for (std::size_t i = 0; i < kSubscoreCount; ++i) subs[kSubscoreLabels[i]] = b.subscores[i];
    j["subscores"] = std::move(subs);
    j["final"] = b.final_score;
    nlohmann::json beam = nlohmann::json::array();
    for (const auto& step : b.beam) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& ts : step) list.push_back({{"term", ts.term}, {"mean", ts.mean}});
        beam.push_back(std::move(list));
    }
    j["beam"] = std::move(beam);
    return j;
}

}  // namespace lexqa::score
