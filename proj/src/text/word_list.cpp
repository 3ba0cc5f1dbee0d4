#include "lexqa/text/word_list.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lexqa::text {

namespace {

std::string_view trim(std::string_view s)
{
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

void WordList::insert(std::string word)
{
    for (auto& c : word) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    words_.insert(std::move(word));
}

WordList WordList::parse(std::string_view text)
{
    WordList list;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        list.insert(std::string(line));
    }
    return list;
}

WordList WordList::read(std::istream& in)
{
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

WordList WordList::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open word list: " + path.string());
    }
    return read(in);
}

const WordList& WordList::smart_stopwords()
{
    static const WordList list = parse(detail::kSmartStopwords);
    return list;
}

const WordList& WordList::default_abbreviations()
{
    static const WordList list = parse(detail::kDefaultAbbreviations);
    return list;
}

}  // namespace lexqa::text
