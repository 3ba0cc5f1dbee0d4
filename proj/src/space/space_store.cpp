#include "lexqa/space/space_store.hpp"

#include <fstream>
#include <stdexcept>

#include "lexqa/kv_file.hpp"
#include "lexqa/parallel.hpp"
#include "lexqa/space/space_io.hpp"

namespace lexqa::space {

namespace fs = std::filesystem;

namespace {

std::string term_dir_name(TermId id)
{
    return "term_" + std::to_string(id);
}

KeyValues options_to_kv(const SpaceBuildOptions& o)
{
    return {{"min_support", std::to_string(o.terminology.min_support)},
        {"conj_window", std::to_string(o.terminology.conjunctions.window)},
        {"conj_window_counts_stopwords", o.terminology.conjunctions.count_stopwords ? "1" : "0"},
        {"context_window", std::to_string(o.words.window)},
        {"min_occurrences", std::to_string(o.words.min_occurrences)}};
}

SpaceBuildOptions options_from_kv(const KeyValues& kv)
{
    SpaceBuildOptions o;
    o.terminology.min_support = static_cast<std::uint32_t>(require_int(kv, "min_support"));
    o.terminology.conjunctions.window = static_cast<int>(require_int(kv, "conj_window"));
    o.terminology.conjunctions.count_stopwords = require_int(kv, "conj_window_counts_stopwords") != 0;
    o.words.window = static_cast<int>(require_int(kv, "context_window"));
    o.words.min_occurrences = static_cast<std::uint32_t>(require_int(kv, "min_occurrences"));
    return o;
}

template <class Map>
auto find_or_throw(const Map& map, TermId term, const char* what)
{
    auto it = map.find(term);
    if (it == map.end()) {
        throw std::out_of_range(std::string("no ") + what + " for term " + std::to_string(term));
    }
    return it->second;
}

}  // namespace

InMemorySpaces InMemorySpaces::build(const std::vector<corpus::PseudoDocument>& docs,
    const SpaceBuildOptions& options, std::vector<std::string>* warnings)
{
    InMemorySpaces spaces;
    spaces.options_ = options;
    auto term_opts = options.terminology;
    term_opts.threads = options.threads;
    spaces.terminology_ = build_terminology_space(docs, term_opts, warnings);

    std::vector<std::shared_ptr<const WordSpace>> words(docs.size());
    std::vector<std::shared_ptr<const SentenceSpace>> sentences(docs.size());
    std::vector<std::vector<std::string>> notes(docs.size());
    parallel_for(docs.size(), options.threads, [&](std::size_t i) {
        words[i] = std::make_shared<const WordSpace>(build_word_space(docs[i], options.words, &notes[i]));
        sentences[i] = std::make_shared<const SentenceSpace>(build_sentence_space(docs[i]));
    });
    for (std::size_t i = 0; i < docs.size(); ++i) {
        spaces.words_.emplace(docs[i].term_id, std::move(words[i]));
        spaces.sentences_.emplace(docs[i].term_id, std::move(sentences[i]));
        spaces.phrases_.emplace(docs[i].term_id, docs[i].phrase);
        if (warnings) warnings->insert(warnings->end(), notes[i].begin(), notes[i].end());
    }
    return spaces;
}

std::shared_ptr<const WordSpace> InMemorySpaces::word_space(TermId term) const
{
    return find_or_throw(words_, term, "word space");
}

std::shared_ptr<const SentenceSpace> InMemorySpaces::sentence_space(TermId term) const
{
    return find_or_throw(sentences_, term, "sentence space");
}

std::string InMemorySpaces::term_phrase(TermId term) const
{
    auto it = phrases_.find(term);
    return it == phrases_.end() ? std::string{} : it->second;
}

void InMemorySpaces::save(const fs::path& dir, const fs::path& pseudo_doc_dir) const
{
    fs::create_directories(dir);
    auto kv = options_to_kv(options_);
    kv["format"] = "lexqa-spaces";
    kv["version"] = std::to_string(kSpaceFormatVersion);
    kv["pseudo_documents"] = fs::absolute(pseudo_doc_dir).string();
    kv["terms"] = std::to_string(terminology_.size());
    write_key_values(dir / "manifest.txt", kv);
    save_terminology_space(terminology_, dir / "terminology");
    for (const auto& [id, space] : words_) save_word_space(*space, dir / "words" / term_dir_name(id));
    for (const auto& [id, space] : sentences_) {
        save_sentence_manifest(*space, dir / "sentences" / (term_dir_name(id) + ".manifest"));
    }
}

DiskSpaces::DiskSpaces(const fs::path& dir, const text::Analyzer& analyzer, std::size_t cache_capacity)
    : dir_(dir), analyzer_(&analyzer), capacity_(std::max<std::size_t>(1, cache_capacity))
{
    auto kv = read_key_values(dir / "manifest.txt");
    if (require(kv, "format") != "lexqa-spaces" || require_int(kv, "version") != kSpaceFormatVersion) {
        throw std::runtime_error(dir.string() + ": not a version 1 space directory");
    }
    options_ = options_from_kv(kv);
    pseudo_doc_dir_ = require(kv, "pseudo_documents");
    terminology_ = load_terminology_space(dir / "terminology");

    std::ifstream manifest(pseudo_doc_dir_ / "manifest.tsv");
    if (!manifest) throw std::runtime_error("cannot read pseudo-document manifest in " + pseudo_doc_dir_.string());
    std::string line;
    while (std::getline(manifest, line)) {
        if (line.empty() || line.front() == '#') continue;
        auto t1 = line.find('\t');
        auto t2 = line.find('\t', t1 + 1);
        phrases_[static_cast<TermId>(std::stoul(line.substr(0, t1)))] = line.substr(t1 + 1, t2 - t1 - 1);
    }
}

template <class T, class Load>
std::shared_ptr<const T> DiskSpaces::cached(Cache<T>& cache, TermId term, Load&& load) const
{
    {
        std::lock_guard lock(mutex_);
        for (auto it = cache.entries.begin(); it != cache.entries.end(); ++it) {
            if (it->first == term) {
                cache.entries.splice(cache.entries.begin(), cache.entries, it);
                return cache.entries.front().second;
            }
        }
    }
    if (terminology_.row_of(term) == terminology_.size()) {
        throw std::out_of_range("term " + std::to_string(term) + " is not in the spaces");
    }
    std::shared_ptr<const T> loaded = load();
    std::lock_guard lock(mutex_);
    for (const auto& [id, existing] : cache.entries) {
        if (id == term) return existing;  // another thread got here first
    }
    cache.entries.emplace_front(term, loaded);
    while (cache.entries.size() > capacity_) cache.entries.pop_back();
    return loaded;
}

std::shared_ptr<const WordSpace> DiskSpaces::word_space(TermId term) const
{
    return cached(word_cache_, term, [&] {
        return std::make_shared<const WordSpace>(load_word_space(dir_ / "words" / term_dir_name(term)));
    });
}

std::shared_ptr<const SentenceSpace> DiskSpaces::sentence_space(TermId term) const
{
    return cached(sentence_cache_, term, [&] {
        auto manifest = load_sentence_manifest(dir_ / "sentences" / (term_dir_name(term) + ".manifest"));
        auto doc = corpus::load_pseudo_document(pseudo_doc_dir_, term, *analyzer_);
        auto space = std::make_shared<const SentenceSpace>(build_sentence_space(doc));
        if (space->size() != manifest.rows || space->features().size() != manifest.features) {
            throw std::runtime_error("sentence space for term " + std::to_string(term)
                + " does not match its manifest");
        }
        return space;
    });
}

std::string DiskSpaces::term_phrase(TermId term) const
{
    auto it = phrases_.find(term);
    return it == phrases_.end() ? std::string{} : it->second;
}

}  // namespace lexqa::space
