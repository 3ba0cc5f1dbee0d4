#include "lexqa/corpus/corpus_reader.hpp"

#include <fstream>
#include <stdexcept>

namespace lexqa::corpus {

bool CorpusReader::accept(std::string text, text::Sentence& out)
{
    ++stats_.sentences_read;
    auto tokens = analyzer_->tokenize(text);
    if (tokens.empty()) {
        ++stats_.filtered_empty;
        return false;
    }
    int stops = 0;
    for (const auto& t : tokens) stops += t.is_stop ? 1 : 0;
    if (stops < options_.min_stopwords) {
        ++stats_.filtered_non_english;
        return false;
    }
    out.text = std::move(text);
    out.tokens = std::move(tokens);
    out.source_id = next_id_++;
    ++stats_.sentences_kept;
    return true;
}

void CorpusReader::read(std::istream& in, const Sink& sink)
{
    text::SentenceSegmenter segmenter(options_.mode);
    auto on_sentence = [&](std::string s) {
        text::Sentence sentence;
        if (accept(std::move(s), sentence)) sink(std::move(sentence));
    };
    std::string line;
    while (std::getline(in, line)) segmenter.feed_line(line, on_sentence);
    segmenter.finish(on_sentence);
    stats_.invalid_utf8_spans += segmenter.invalid_utf8_spans();
}

void CorpusReader::read_file(const std::filesystem::path& path, const Sink& sink)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
    read(in, sink);
}

std::vector<text::Sentence> read_corpus(std::istream& in, const text::Analyzer& analyzer,
    const CorpusOptions& options, CorpusStats* stats)
{
    CorpusReader reader(analyzer, options);
    std::vector<text::Sentence> out;
    reader.read(in, [&out](text::Sentence s) { out.push_back(std::move(s)); });
    if (stats) *stats = reader.stats();
    return out;
}

}  // namespace lexqa::corpus
