// Command-line front end: build pseudo-documents and spaces, answer
// questions, and run evaluation, ablation and beam sweeps.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexqa/corpus/corpus_reader.hpp"
#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/eval/config.hpp"
#include "lexqa/eval/evaluation.hpp"
#include "lexqa/eval/questions.hpp"
#include "lexqa/eval/report.hpp"
#include "lexqa/score/breakdown_json.hpp"
#include "lexqa/space/space_store.hpp"

namespace {

using namespace lexqa;

struct Common {
    std::string config_path;
    std::optional<unsigned> threads;

    eval::EngineConfig load() const
    {
        eval::EngineConfig cfg;
        if (!config_path.empty()) cfg = eval::load_config(config_path);
        if (threads) {
            cfg.threads = *threads;
            cfg.pseudo_docs.threads = *threads;
            cfg.spaces.threads = *threads;
        }
        cfg.validate();
        return cfg;
    }
};

void write_json_file(const std::string& path, const nlohmann::json& j)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

int build_pdocs(const Common& common, const std::string& terms_path, const std::vector<std::string>& corpus_paths,
    bool lines, const std::string& out_dir)
{
    auto cfg = common.load();
    if (lines) cfg.corpus.mode = text::SegmentMode::lines;
    text::Analyzer analyzer;
    auto bank = corpus::TermBank::load(terms_path, analyzer);

    corpus::CorpusReader reader(analyzer, cfg.corpus);
    std::vector<text::Sentence> pending;
    std::size_t file = 0;
    std::ifstream in;
    std::size_t next = 0;
    // Pull sentences file by file, one file's worth at a time.
    auto source = [&](text::Sentence& out) {
        while (next >= pending.size()) {
            if (file >= corpus_paths.size()) return false;
            pending.clear();
            next = 0;
            reader.read_file(corpus_paths[file++], [&](text::Sentence s) { pending.push_back(std::move(s)); });
        }
        out = std::move(pending[next++]);
        return true;
    };
    auto set = corpus::build_pseudo_documents(source, bank, cfg.pseudo_docs);
    corpus::save_pseudo_documents(set, out_dir);

    const auto& st = reader.stats();
    std::cerr << "sentences read " << st.sentences_read << ", kept " << st.sentences_kept
              << ", non-English " << st.filtered_non_english << ", invalid UTF-8 spans "
              << st.invalid_utf8_spans << '\n';
    std::cerr << "terms " << bank.size() << ", pseudo-documents " << set.documents.size() << ", dropped "
              << set.dropped.size() << '\n';
    for (const auto& w : set.warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int build_spaces(const Common& common, const std::string& pdoc_dir, const std::string& out_dir)
{
    auto cfg = common.load();
    text::Analyzer analyzer;
    auto set = corpus::load_pseudo_documents(pdoc_dir, analyzer);
    if (set.documents.empty()) {
        std::cerr << "error: no pseudo-documents in " << pdoc_dir << '\n';
        return 1;
    }
    std::vector<std::string> warnings;
    auto spaces = space::InMemorySpaces::build(set.documents, cfg.spaces, &warnings);
    spaces.save(out_dir, pdoc_dir);
    std::cerr << "terms " << spaces.terminology().size() << ", terminology features "
              << spaces.terminology().features().size() << '\n';
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return 0;
}

int answer(const Common& common, const std::string& spaces_dir, const std::string& question,
    const std::vector<std::string>& choices, const std::string& questions_path)
{
    auto cfg = common.load();
    text::Analyzer analyzer;
    space::DiskSpaces spaces(spaces_dir, analyzer);

    std::vector<eval::Question> questions;
    if (!questions_path.empty()) {
        questions = eval::load_questions(questions_path);
    } else {
        if (choices.size() < 2) throw std::runtime_error("give --question and at least two --choice");
        questions.push_back({"q", question, choices, 0});
    }
    for (const auto& q : questions) {
        std::vector<text::TokenList> tokenized;
        for (const auto& c : q.choices) tokenized.push_back(analyzer.tokenize(c));
        auto result = score::answer_question(analyzer.tokenize(q.text), tokenized, spaces, cfg.beam);
        for (const auto& b : result.breakdowns) {
            auto j = score::breakdown_to_json(b, q.id, &spaces);
            j["best"] = std::find(result.best.begin(), result.best.end(), b.choice_index) != result.best.end();
            std::cout << j.dump() << '\n';
        }
    }
    return 0;
}

eval::EvalOptions eval_options(const eval::EngineConfig& cfg)
{
    eval::EvalOptions opts;
    opts.beam = cfg.beam;
    opts.threads = cfg.threads;
    opts.config = cfg.snapshot();
    return opts;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Term-bank guided multiple-choice question answering over sparse vector spaces"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--config", common.config_path, "key = value config file")->check(CLI::ExistingFile);
    app.add_option("--threads", common.threads, "worker threads (0 = all cores)");

    auto* pdocs = app.add_subcommand("build-pdocs", "collect pseudo-documents from a corpus");
    std::string terms_path;
    std::vector<std::string> corpus_paths;
    std::string pdoc_out;
    bool lines = false;
    pdocs->add_option("--terms", terms_path, "term bank, one term per line")->required()->check(CLI::ExistingFile);
    pdocs->add_option("--corpus", corpus_paths, "plain-text corpus file(s)")->required()->check(CLI::ExistingFile);
    pdocs->add_flag("--lines", lines, "input is already one sentence per line");
    pdocs->add_option("--out", pdoc_out, "output directory")->required();

    auto* spaces_cmd = app.add_subcommand("build-spaces", "build terminology, word and sentence spaces");
    std::string pdoc_dir;
    std::string spaces_out;
    spaces_cmd->add_option("--pdocs", pdoc_dir, "pseudo-document directory")->required()->check(CLI::ExistingDirectory);
    spaces_cmd->add_option("--out", spaces_out, "output directory")->required();

    auto* answer_cmd = app.add_subcommand("answer", "score the choices of one or more questions");
    std::string spaces_dir;
    std::string question;
    std::vector<std::string> choices;
    std::string questions_path;
    answer_cmd->add_option("--spaces", spaces_dir, "space directory")->required()->check(CLI::ExistingDirectory);
    answer_cmd->add_option("--question", question, "question text");
    answer_cmd->add_option("--choice", choices, "answer choice (repeat)");
    answer_cmd->add_option("--questions", questions_path, "JSON-lines question file")->check(CLI::ExistingFile);

    std::string report_json;
    std::string breakdowns_path;
    auto add_eval_options = [&](CLI::App* cmd) {
        cmd->add_option("--spaces", spaces_dir, "space directory")->required()->check(CLI::ExistingDirectory);
        cmd->add_option("--questions", questions_path, "JSON-lines question file")->required()->check(CLI::ExistingFile);
        cmd->add_option("--json", report_json, "write the report as JSON");
    };
    auto* evaluate_cmd = app.add_subcommand("evaluate", "accuracy with 1/n tie credit");
    add_eval_options(evaluate_cmd);
    evaluate_cmd->add_option("--breakdowns", breakdowns_path, "write per-choice JSON lines");
    auto* ablate_cmd = app.add_subcommand("ablate", "remove each subscore in turn");
    add_eval_options(ablate_cmd);
    auto* sweep_cmd = app.add_subcommand("sweep", "vary the beam widths");
    add_eval_options(sweep_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*pdocs) return build_pdocs(common, terms_path, corpus_paths, lines, pdoc_out);
        if (*spaces_cmd) return build_spaces(common, pdoc_dir, spaces_out);
        if (*answer_cmd) return answer(common, spaces_dir, question, choices, questions_path);

        auto cfg = common.load();
        text::Analyzer analyzer;
        space::DiskSpaces spaces(spaces_dir, analyzer);
        auto questions = eval::load_questions(questions_path);
        auto opts = eval_options(cfg);
        if (*evaluate_cmd) {
            opts.keep_breakdowns = !breakdowns_path.empty();
            auto report = eval::run_evaluation(questions, spaces, analyzer, opts);
            eval::print_report(std::cout, report);
            if (!report_json.empty()) write_json_file(report_json, eval::report_to_json(report));
            if (!breakdowns_path.empty()) {
                std::ofstream out(breakdowns_path);
                for (const auto& q : report.questions) {
                    for (const auto& b : q.breakdowns) out << score::breakdown_to_json(b, q.id, &spaces).dump() << '\n';
                }
            }
        } else if (*ablate_cmd) {
            auto report = eval::run_ablation(questions, spaces, analyzer, opts);
            eval::print_comparison(std::cout, report, "ablated");
            if (!report_json.empty()) write_json_file(report_json, eval::comparison_to_json(report));
        } else if (*sweep_cmd) {
            auto report = eval::run_sweep(questions, spaces, analyzer, opts, eval::default_sweep(cfg.beam));
            eval::print_comparison(std::cout, report, "beam");
            if (!report_json.empty()) write_json_file(report_json, eval::comparison_to_json(report));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
