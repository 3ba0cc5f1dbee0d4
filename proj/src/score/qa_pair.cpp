#include "lexqa/score/qa_pair.hpp"

#include <algorithm>

#include "lexqa/space/terminology_space.hpp"
#include "lexqa/space/word_space.hpp"

namespace lexqa::score {

std::size_t QAPair::word_index(const std::string& stem) const
{
    auto it = std::lower_bound(words.begin(), words.end(), stem);
    return it != words.end() && *it == stem ? static_cast<std::size_t>(it - words.begin()) : words.size();
}

QAPair make_qa_pair(text::TokenList question, text::TokenList answer, const QAOptions& options)
{
    QAPair qa;
    auto features = space::qa_features(question, answer, options.conjunctions);
    qa.unigrams = std::move(features.unigrams);
    qa.conjunctions = std::move(features.conjunctions);
    qa.ngrams = text::set_union(text::extract_ngrams(question, 3), text::extract_ngrams(answer, 3));

    auto contexts = space::qa_word_contexts(question, answer, options.context_window);
    for (auto& [stem, ctx] : contexts) {
        qa.words.push_back(stem);
        qa.contexts.push_back(std::move(ctx));
    }
    qa.in_question.assign(qa.words.size(), false);
    qa.in_answer.assign(qa.words.size(), false);
    for (const auto& t : question) {
        if (!t.is_stop) qa.in_question[qa.word_index(t.stem)] = true;
    }
    for (const auto& t : answer) {
        if (!t.is_stop) qa.in_answer[qa.word_index(t.stem)] = true;
    }
    qa.question = std::move(question);
    qa.answer = std::move(answer);
    return qa;
}

}  // namespace lexqa::score
