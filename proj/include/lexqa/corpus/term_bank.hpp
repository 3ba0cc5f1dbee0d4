#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexqa/text/analyzer.hpp"

namespace lexqa::corpus {

using TermId = std::uint32_t;

struct Term {
    TermId id = 0;
    std::vector<std::string> phrase;  // lowercased words
    std::vector<std::string> stems;

    std::string text() const;
};

/// Flat list of domain terms. Ids are dense and follow first appearance;
/// duplicate phrases are dropped on load.
class TermBank {
public:
    TermBank() = default;

    static TermBank read(std::istream& in, const text::Analyzer& analyzer);
    static TermBank load(const std::filesystem::path& path, const text::Analyzer& analyzer);

    /// Returns the id of the phrase; adds it if new. Empty phrases are rejected.
    TermId add(const std::vector<std::string>& phrase, const std::vector<std::string>& stems);
    TermId add(std::string_view line, const text::Analyzer& analyzer);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    const Term& operator[](TermId id) const { return terms_.at(id); }

private:
    std::vector<Term> terms_;
    std::unordered_map<std::string, TermId> index_;  // joined phrase -> id
};

}  // namespace lexqa::corpus
