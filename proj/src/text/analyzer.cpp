#include "lexqa/text/analyzer.hpp"

#include <cctype>

#include "lexqa/text/porter_stemmer.hpp"

namespace lexqa::text {

namespace {

bool is_word_byte(char c)
{
    auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u);
}

// Curly apostrophe U+2019.
constexpr std::string_view kRightSingleQuote = "\xE2\x80\x99";

}  // namespace

TokenList Analyzer::tokenize(std::string_view text) const
{
    TokenList tokens;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (!is_word_byte(text[i]) || text.compare(i, 3, kRightSingleQuote) == 0) {
            ++i;
            continue;
        }
        std::string surface;
        std::string lower;
        while (i < n) {
            if (text.compare(i, 3, kRightSingleQuote) == 0 || text[i] == '\'') {
                std::size_t width = text[i] == '\'' ? 1 : 3;
                if (!lower.empty() && i + width < n && is_word_byte(text[i + width])
                    && text.compare(i + width, 3, kRightSingleQuote) != 0) {
                    surface.append(text.substr(i, width));
                    lower.push_back('\'');
                    i += width;
                    continue;
                }
                break;
            }
            if (!is_word_byte(text[i])) break;
            surface.push_back(text[i]);
            lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
            ++i;
        }
        Token tok;
        tok.is_stop = stopwords_->contains(lower);
        tok.stem = porter_stem(lower);
        tok.surface = std::move(surface);
        tok.lower = std::move(lower);
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

}  // namespace lexqa::text
