#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace lexqa::eval {

struct Question {
    std::string id;
    std::string text;
    std::vector<std::string> choices;
    std::size_t answer_key = 0;

    friend bool operator==(const Question&, const Question&) = default;
};

/// JSON lines: {"id": str, "question": str, "choices": [str, ...], "answer_key": int}.
/// Blank lines are skipped. Throws std::runtime_error naming the line for a
/// malformed record, fewer than two choices, an empty choice, an
/// out-of-range key, or a duplicate id.
std::vector<Question> read_questions(std::istream& in);
std::vector<Question> load_questions(const std::filesystem::path& path);
void write_questions(std::ostream& out, const std::vector<Question>& questions);

}  // namespace lexqa::eval
