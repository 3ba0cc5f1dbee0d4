#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lexqa::text {

struct Token {
    std::string surface;  // as written
    std::string lower;    // lowercased surface, used for stopword and term matching
    std::string stem;     // Porter stem of `lower`
    bool is_stop = false;

    friend bool operator==(const Token&, const Token&) = default;
};

using TokenList = std::vector<Token>;

struct Sentence {
    std::string text;
    TokenList tokens;
    std::uint64_t source_id = 0;  // position in the corpus stream
};

}  // namespace lexqa::text
