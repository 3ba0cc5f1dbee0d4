#include "lexqa/corpus/pseudo_docs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lexqa/parallel.hpp"

namespace lexqa::corpus {

namespace {

const std::string& word_of(const text::Token& t, MatchMode mode)
{
    return mode == MatchMode::surface ? t.lower : t.stem;
}

const std::vector<std::string>& words_of(const Term& t, MatchMode mode)
{
    return mode == MatchMode::surface ? t.phrase : t.stems;
}

bool match_at(const text::TokenList& tokens, std::size_t pos, const std::vector<std::string>& phrase,
    MatchMode mode)
{
    if (pos + phrase.size() > tokens.size()) return false;
    for (std::size_t k = 0; k < phrase.size(); ++k) {
        if (word_of(tokens[pos + k], mode) != phrase[k]) return false;
    }
    return true;
}

bool contains_phrase(const text::TokenList& tokens, const std::vector<std::string>& phrase,
    MatchMode mode)
{
    if (phrase.empty()) throw std::invalid_argument("empty phrase");
    for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
        if (match_at(tokens, i, phrase, mode)) return true;
    }
    return false;
}

// Terms grouped by their first word.
class PhraseIndex {
public:
    PhraseIndex(const TermBank& bank, MatchMode mode) : bank_(&bank), mode_(mode)
    {
        for (const auto& t : bank.terms()) {
            by_first_[words_of(t, mode).front()].push_back(t.id);
        }
    }

    // Distinct matching term ids, ascending.
    std::vector<TermId> match(const text::TokenList& tokens) const
    {
        std::vector<TermId> out;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            auto it = by_first_.find(word_of(tokens[i], mode_));
            if (it == by_first_.end()) continue;
            for (TermId id : it->second) {
                if (match_at(tokens, i, words_of((*bank_)[id], mode_), mode_)) out.push_back(id);
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    const TermBank* bank_;
    MatchMode mode_;
    std::unordered_map<std::string, std::vector<TermId>> by_first_;
};

std::filesystem::path term_file(const std::filesystem::path& dir, TermId id)
{
    return dir / ("term_" + std::to_string(id) + ".txt");
}

struct ManifestRow {
    TermId id = 0;
    std::string phrase;
    std::size_t count = 0;
};

std::vector<ManifestRow> read_manifest(const std::filesystem::path& dir)
{
    std::ifstream in(dir / "manifest.tsv");
    if (!in) throw std::runtime_error("missing pseudo-document manifest in " + dir.string());
    std::vector<ManifestRow> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.front() == '#') continue;
        auto t1 = line.find('\t');
        auto t2 = line.find('\t', t1 == std::string::npos ? t1 : t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos) {
            throw std::runtime_error("malformed manifest.tsv line " + std::to_string(lineno));
        }
        ManifestRow row;
        row.id = static_cast<TermId>(std::stoul(line.substr(0, t1)));
        row.phrase = line.substr(t1 + 1, t2 - t1 - 1);
        row.count = std::stoul(line.substr(t2 + 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

PseudoDocument read_term_file(const std::filesystem::path& dir, const ManifestRow& row,
    const text::Analyzer& analyzer)
{
    std::ifstream in(term_file(dir, row.id));
    if (!in) throw std::runtime_error("missing pseudo-document for term " + std::to_string(row.id));
    PseudoDocument doc;
    doc.term_id = row.id;
    doc.phrase = row.phrase;
    std::string line;
    std::uint64_t position = 0;
    while (std::getline(in, line)) {
        text::Sentence s;
        s.tokens = analyzer.tokenize(line);
        s.text = std::move(line);
        s.source_id = position++;
        doc.sentences.push_back(std::move(s));
    }
    if (doc.sentences.size() != row.count) {
        throw std::runtime_error("sentence count mismatch for term " + std::to_string(row.id));
    }
    return doc;
}

}  // namespace

bool match_term(const text::Sentence& sentence, const std::vector<std::string>& phrase)
{
    return contains_phrase(sentence.tokens, phrase, MatchMode::surface);
}

bool match_term(const text::Sentence& sentence, const Term& term, MatchMode mode)
{
    return contains_phrase(sentence.tokens, words_of(term, mode), mode);
}

PseudoDocSet build_pseudo_documents(const SentenceSource& source, const TermBank& bank,
    const PseudoDocOptions& options)
{
    if (options.cap < options.min_sentences) {
        throw std::invalid_argument("cap must be >= min_sentences");
    }
    PhraseIndex index(bank, options.match);
    std::vector<std::vector<text::Sentence>> kept(bank.size());
    std::vector<std::size_t> matches(bank.size(), 0);
    PseudoDocSet result;

    std::vector<text::Sentence> batch;
    std::vector<std::vector<TermId>> hits;
    bool more = true;
    while (more) {
        batch.clear();
        text::Sentence s;
        while (batch.size() < std::max<std::size_t>(1, options.batch_size) && (more = source(s))) {
            batch.push_back(std::move(s));
            s = {};
        }
        hits.assign(batch.size(), {});
        parallel_for(batch.size(), options.threads,
            [&](std::size_t i) { hits[i] = index.match(batch[i].tokens); });
        // merge in corpus order
        for (std::size_t i = 0; i < batch.size(); ++i) {
            for (TermId id : hits[i]) {
                if (matches[id]++ < options.cap) kept[id].push_back(batch[i]);
            }
        }
        result.sentences_scanned += batch.size();
    }

    for (const auto& term : bank.terms()) {
        if (matches[term.id] < options.min_sentences) {
            result.dropped.push_back({term.id, matches[term.id]});
            continue;
        }
        result.documents.push_back({term.id, term.text(), std::move(kept[term.id])});
    }
    if (result.sentences_scanned == 0) {
        result.warnings.push_back("empty corpus: every term dropped");
    } else if (!result.dropped.empty()) {
        result.warnings.push_back(std::to_string(result.dropped.size())
            + " term(s) dropped with fewer than " + std::to_string(options.min_sentences)
            + " matching sentences");
    }
    return result;
}

PseudoDocSet build_pseudo_documents(const std::vector<text::Sentence>& corpus,
    const TermBank& bank, const PseudoDocOptions& options)
{
    std::size_t next = 0;
    return build_pseudo_documents(
        [&](text::Sentence& out) {
            if (next >= corpus.size()) return false;
            out = corpus[next++];
            return true;
        },
        bank, options);
}

void save_pseudo_documents(const PseudoDocSet& set, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::ofstream manifest(dir / "manifest.tsv");
    manifest << "# term_id\tphrase\tsentences\n";
    for (const auto& doc : set.documents) {
        std::ofstream out(term_file(dir, doc.term_id));
        for (const auto& s : doc.sentences) out << s.text << '\n';
        if (!out) throw std::runtime_error("failed writing pseudo-document " + std::to_string(doc.term_id));
        manifest << doc.term_id << '\t' << doc.phrase << '\t' << doc.sentences.size() << '\n';
    }
    std::ofstream dropped(dir / "dropped.tsv");
    dropped << "# term_id\tmatches\n";
    for (const auto& d : set.dropped) dropped << d.term_id << '\t' << d.matches << '\n';
    if (!manifest || !dropped) throw std::runtime_error("failed writing manifest in " + dir.string());
}

PseudoDocSet load_pseudo_documents(const std::filesystem::path& dir, const text::Analyzer& analyzer)
{
    PseudoDocSet set;
    for (const auto& row : read_manifest(dir)) {
        set.documents.push_back(read_term_file(dir, row, analyzer));
    }
    std::sort(set.documents.begin(), set.documents.end(),
        [](const auto& a, const auto& b) { return a.term_id < b.term_id; });
    return set;
}

PseudoDocument load_pseudo_document(const std::filesystem::path& dir, TermId id,
    const text::Analyzer& analyzer)
{
    for (const auto& row : read_manifest(dir)) {
        if (row.id == id) return read_term_file(dir, row, analyzer);
    }
    throw std::runtime_error("term " + std::to_string(id) + " not in pseudo-document manifest");
}

}  // namespace lexqa::corpus
