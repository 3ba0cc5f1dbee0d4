#include "lexqa/eval/questions.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace lexqa::eval {

namespace {

[[noreturn]] void fail(std::size_t lineno, const std::string& what)
{
    throw std::runtime_error("questions line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

std::vector<Question> read_questions(std::istream& in)
{
    std::vector<Question> out;
    std::set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            fail(lineno, std::string("invalid JSON: ") + e.what());
        }
        Question q;
        try {
            q.id = j.at("id").get<std::string>();
            q.text = j.at("question").get<std::string>();
            q.choices = j.at("choices").get<std::vector<std::string>>();
            auto key = j.at("answer_key").get<long long>();
            if (key < 0 || static_cast<std::size_t>(key) >= q.choices.size()) {
                fail(lineno, "answer_key " + std::to_string(key) + " out of range for "
                        + std::to_string(q.choices.size()) + " choices");
            }
            q.answer_key = static_cast<std::size_t>(key);
        } catch (const nlohmann::json::exception& e) {
            fail(lineno, std::string("bad record: ") + e.what());
        }
        if (q.choices.size() < 2) fail(lineno, "need at least two choices");
        for (const auto& c : q.choices) {
            if (c.empty()) fail(lineno, "empty choice");
        }
        if (!ids.insert(q.id).second) fail(lineno, "duplicate id " + q.id);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<Question> load_questions(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open questions file: " + path.string());
    return read_questions(in);
}

void write_questions(std::ostream& out, const std::vector<Question>& questions)
{
    for (const auto& q : questions) {
        nlohmann::json j{{"id", q.id}, {"question", q.text}, {"choices", q.choices}, {"answer_key", q.answer_key}};
        out << j.dump() << '\n';
    }
}

}  // namespace lexqa::eval
