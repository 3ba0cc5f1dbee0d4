#include "lexqa/eval/config.hpp"

#include <functional>
#include <stdexcept>

namespace lexqa::eval {

namespace {

template <class T>
void set_unsigned(T& field, const KeyValues& kv, const std::string& key)
{
    auto v = require_int(kv, key);
    if (v < 0) throw std::runtime_error("key " + key + " must be non-negative");
    field = static_cast<T>(v);
}

}  // namespace

void EngineConfig::apply(const KeyValues& kv)
{
    const std::map<std::string, std::function<void(const std::string&)>> handlers{
        {"min_stopwords", [&](const auto& k) { corpus.min_stopwords = static_cast<int>(require_int(kv, k)); }},
        {"segment_mode",
            [&](const auto& k) {
                const auto& v = require(kv, k);
                if (v == "rules") corpus.mode = text::SegmentMode::rules;
                else if (v == "lines") corpus.mode = text::SegmentMode::lines;
                else throw std::runtime_error("segment_mode must be rules or lines");
            }},
        {"min_sentences", [&](const auto& k) { set_unsigned(pseudo_docs.min_sentences, kv, k); }},
        {"cap", [&](const auto& k) { set_unsigned(pseudo_docs.cap, kv, k); }},
        {"match_mode",
            [&](const auto& k) {
                const auto& v = require(kv, k);
                if (v == "surface") pseudo_docs.match = corpus::MatchMode::surface;
                else if (v == "stemmed") pseudo_docs.match = corpus::MatchMode::stemmed;
                else throw std::runtime_error("match_mode must be surface or stemmed");
            }},
        {"min_support", [&](const auto& k) { set_unsigned(spaces.terminology.min_support, kv, k); }},
        {"conj_window", [&](const auto& k) { spaces.terminology.conjunctions.window = static_cast<int>(require_int(kv, k)); }},
        {"conj_window_counts_stopwords",
            [&](const auto& k) { spaces.terminology.conjunctions.count_stopwords = require_int(kv, k) != 0; }},
        {"context_window", [&](const auto& k) { spaces.words.window = static_cast<int>(require_int(kv, k)); }},
        {"min_occurrences", [&](const auto& k) { set_unsigned(spaces.words.min_occurrences, kv, k); }},
        {"step1_keep", [&](const auto& k) { set_unsigned(beam.step1_keep, kv, k); }},
        {"step2_keep", [&](const auto& k) { set_unsigned(beam.step2_keep, kv, k); }},
        {"step3_keep", [&](const auto& k) { set_unsigned(beam.step3_keep, kv, k); }},
        {"k", [&](const auto& k) { set_unsigned(beam.k_sentences, kv, k); }},
        {"m", [&](const auto& k) { set_unsigned(beam.m_subset, kv, k); }},
        {"subset_candidate_cap", [&](const auto& k) { set_unsigned(beam.subset_candidate_cap, kv, k); }},
        {"threads", [&](const auto& k) { set_unsigned(threads, kv, k); }},
    };
    for (const auto& [key, value] : kv) {
        auto it = handlers.find(key);
        if (it == handlers.end()) throw std::runtime_error("unknown config key: " + key);
        it->second(key);
    }
    pseudo_docs.threads = threads;
    spaces.threads = threads;
}

KeyValues EngineConfig::snapshot() const
{
    return {
        {"min_stopwords", std::to_string(corpus.min_stopwords)},
        {"segment_mode", corpus.mode == text::SegmentMode::rules ? "rules" : "lines"},
        {"min_sentences", std::to_string(pseudo_docs.min_sentences)},
        {"cap", std::to_string(pseudo_docs.cap)},
        {"match_mode", pseudo_docs.match == corpus::MatchMode::surface ? "surface" : "stemmed"},
        {"min_support", std::to_string(spaces.terminology.min_support)},
        {"conj_window", std::to_string(spaces.terminology.conjunctions.window)},
        {"conj_window_counts_stopwords", spaces.terminology.conjunctions.count_stopwords ? "1" : "0"},
        {"context_window", std::to_string(spaces.words.window)},
        {"min_occurrences", std::to_string(spaces.words.min_occurrences)},
        {"step1_keep", std::to_string(beam.step1_keep)},
        {"step2_keep", std::to_string(beam.step2_keep)},
        {"step3_keep", std::to_string(beam.step3_keep)},
        {"k", std::to_string(beam.k_sentences)},
        {"m", std::to_string(beam.m_subset)},
        {"subset_candidate_cap", std::to_string(beam.subset_candidate_cap)},
        {"threads", std::to_string(threads)},
    };
}

void EngineConfig::validate() const
{
    beam.validate();
    if (pseudo_docs.cap < pseudo_docs.min_sentences) throw std::invalid_argument("cap must be >= min_sentences");
    if (spaces.terminology.conjunctions.window < 1) throw std::invalid_argument("conj_window must be >= 1");
    if (spaces.words.window < 1) throw std::invalid_argument("context_window must be >= 1");
}

EngineConfig load_config(const std::filesystem::path& path)
{
    EngineConfig cfg;
    cfg.apply(read_key_values(path));
    cfg.validate();
    return cfg;
}

}  // namespace lexqa::eval
