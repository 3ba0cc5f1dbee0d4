#include "lexqa/corpus/term_bank.hpp"

#include <fstream>
#include <stdexcept>

namespace lexqa::corpus {

std::string Term::text() const
{
    std::string out;
    for (const auto& w : phrase) {
        if (!out.empty()) out.push_back(' ');
        out += w;
    }
    return out;
}

TermId TermBank::add(const std::vector<std::string>& phrase, const std::vector<std::string>& stems)
{
    if (phrase.empty()) throw std::invalid_argument("empty term phrase");
    std::string joined;
    for (const auto& w : phrase) {
        joined += w;
        joined.push_back('\n');
    }
    if (auto it = index_.find(joined); it != index_.end()) return it->second;
    Term term;
    term.id = static_cast<TermId>(terms_.size());
    term.phrase = phrase;
    term.stems = stems;
    index_.emplace(std::move(joined), term.id);
    terms_.push_back(std::move(term));
    return terms_.back().id;
}

TermId TermBank::add(std::string_view line, const text::Analyzer& analyzer)
{
    std::vector<std::string> phrase;
    std::vector<std::string> stems;
    for (auto& tok : analyzer.tokenize(line)) {
        phrase.push_back(std::move(tok.lower));
        stems.push_back(std::move(tok.stem));
    }
    return add(phrase, stems);
}

TermBank TermBank::read(std::istream& in, const text::Analyzer& analyzer)
{
    TermBank bank;
    std::string line;
    while (std::getline(in, line)) {
        if (analyzer.tokenize(line).empty()) continue;
        bank.add(line, analyzer);
    }
    return bank;
}

TermBank TermBank::load(const std::filesystem::path& path, const text::Analyzer& analyzer)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open term bank: " + path.string());
    return read(in, analyzer);
}

}  // namespace lexqa::corpus
