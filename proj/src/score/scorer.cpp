#include "lexqa/score/scorer.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lexqa::score {

using space::Weighting;

void BeamConfig::validate() const
{
    if (step1_keep == 0 || step2_keep == 0 || step3_keep == 0 || k_sentences == 0 || m_subset == 0
        || subset_candidate_cap == 0) {
        throw std::invalid_argument("beam parameters must be positive");
    }
    if (step1_keep < step2_keep || step2_keep < step3_keep) {
        throw std::invalid_argument("beam widths must satisfy step1 >= step2 >= step3");
    }
}

AblationMask AblationMask::without(std::size_t subscore)
{
    AblationMask mask;
    mask.set(subscore, false);
    return mask;
}

void AblationMask::set(std::size_t i, bool on)
{
    auto before = enabled_[i];
    enabled_.at(i) = on;
    if (count() == 0) {
        enabled_[i] = before;
        throw std::invalid_argument("ablation mask must keep at least one subscore");
    }
}

std::size_t AblationMask::count() const
{
    return static_cast<std::size_t>(std::count(enabled_.begin(), enabled_.end(), true));
}

double AblationMask::mean(const Subscores& s, std::size_t upto) const
{
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < upto; ++i) {
        if (!enabled_[i]) continue;
        sum += s[i];
        ++n;
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

namespace {

// Higher mean first, then lower term id.
void rank(std::vector<TermScore>& list)
{
    std::sort(list.begin(), list.end(), [](const TermScore& a, const TermScore& b) {
        if (a.mean != b.mean) return a.mean > b.mean;
        return a.term < b.term;
    });
}

void keep_top(std::vector<TermScore>& list, std::size_t keep)
{
    if (list.size() > keep) list.resize(keep);
}

double ratio(double dot, std::size_t n)
{
    return n == 0 ? 0.0 : dot / static_cast<double>(n);
}

}  // namespace

double overlap(const space::CountMatrix& m, std::size_t row, std::span<const std::uint32_t> qa_ids,
    std::size_t qa_size, Weighting kind)
{
    if (qa_size == 0) return 0.0;
    return m.dot(row, qa_ids, kind) / static_cast<double>(qa_size);
}

std::vector<TermScore> step1(const QAPair& qa, const space::TerminologySpace& terms,
    const BeamConfig& cfg, const AblationMask& mask)
{
    const auto& m = terms.matrix();
    const std::size_t rows = terms.size();
    std::vector<double> uni(rows, 0.0);
    std::vector<double> conj(rows, 0.0);
    std::vector<char> touched(rows, 0);

    auto accumulate = [&](const FeatureSet& set, std::vector<double>& acc) {
        // Feature ids ascend with the set's order, so each row sums in the
        // same order as a row-by-row scan would.
        for (auto f : terms.features().lookup(set)) {
            for (const auto& p : terms.postings(f)) {
                acc[p.row] += m.weight(p.row, space::CountEntry{f, p.tf}, Weighting::tfidf);
                touched[p.row] = 1;
            }
        }
    };
    accumulate(qa.unigrams, uni);
    accumulate(qa.conjunctions, conj);

    auto make = [&](std::size_t r) {
        TermScore ts;
        ts.term = terms.term_id(r);
        ts.sub[tfidf_unigram] = ratio(uni[r], qa.unigrams.size());
        ts.sub[tfidf_conjunction] = ratio(conj[r], qa.conjunctions.size());
        ts.mean = mask.mean(ts.sub, 2);
        return ts;
    };

    std::vector<TermScore> ranked;
    std::vector<char> taken(rows, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!touched[r]) continue;
        auto ts = make(r);
        if (ts.mean > 0.0) {
            ranked.push_back(ts);
            taken[r] = 1;
        }
    }
    rank(ranked);
    keep_top(ranked, cfg.step1_keep);
    // Remaining slots go to zero-mean terms by ascending id, as in a full scan.
    for (std::size_t r = 0; r < rows && ranked.size() < cfg.step1_keep; ++r) {
        if (!taken[r]) ranked.push_back(make(r));
    }
    return ranked;
}

std::vector<TermScore> step2(std::vector<TermScore> survivors, const QAPair& qa,
    const space::TerminologySpace& terms, const BeamConfig& cfg, const AblationMask& mask)
{
    const auto& m = terms.matrix();
    auto uni_ids = terms.features().lookup(qa.unigrams);
    auto conj_ids = terms.features().lookup(qa.conjunctions);
    for (auto& ts : survivors) {
        auto row = terms.row_of(ts.term);
        ts.sub[binary_unigram] = overlap(m, row, uni_ids, qa.unigrams.size(), Weighting::binary);
        ts.sub[binary_conjunction] = overlap(m, row, conj_ids, qa.conjunctions.size(), Weighting::binary);
        ts.mean = mask.mean(ts.sub, 4);
    }
    rank(survivors);
    keep_top(survivors, cfg.step2_keep);
    return survivors;
}

std::pair<double, double> word_context_scores(const QAPair& qa, const space::WordSpace& words)
{
    const std::size_t n = qa.words.size();
    if (n == 0) return {0.0, 0.0};
    const auto& m = words.matrix();

    std::vector<std::size_t> rows(n);
    std::vector<std::vector<std::uint32_t>> ctx_ids(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = words.row_of(qa.words[i]);
        ctx_ids[i] = m.features().lookup(qa.contexts[i]);
    }
    // score of word y's row against the QA context of word x
    auto match = [&](std::size_t y, std::size_t x) {
        if (rows[y] == words.size()) return 0.0;
        return overlap(m, rows[y], ctx_ids[x], qa.contexts[x].size(), Weighting::tfidf);
    };

    double same = 0.0;
    double cross = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        same += match(x, x);
        double best = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            bool opposite = (qa.in_question[x] && qa.in_answer[y]) || (qa.in_answer[x] && qa.in_question[y]);
            if (opposite) best = std::max(best, match(y, x));
        }
        cross += best;
    }
    return {same / static_cast<double>(n), cross / static_cast<double>(n)};
}

std::vector<TermScore> step3(std::vector<TermScore> survivors, const QAPair& qa,
    const space::SpaceProvider& spaces, const BeamConfig& cfg, const AblationMask& mask)
{
    for (auto& ts : survivors) {
        auto words = spaces.word_space(ts.term);
        auto [same, cross] = word_context_scores(qa, *words);
        ts.sub[context_same_word] = same;
        ts.sub[context_other_word] = cross;
        ts.mean = mask.mean(ts.sub, 6);
    }
    rank(survivors);
    keep_top(survivors, cfg.step3_keep);
    return survivors;
}

SubsetMatcher::SubsetMatcher(const QAPair& qa, const space::SentenceSpace& sentences, const BeamConfig& cfg)
    : qa_(&qa), sentences_(&sentences), m_(cfg.m_subset), cap_(cfg.subset_candidate_cap),
      words_(qa.words.size())
{
    FeatureSet universe;
    for (const auto& ctx : qa.contexts) universe.insert(universe.end(), ctx.begin(), ctx.end());
    text::normalize(universe);
    blocks_ = (universe.size() + 63) / 64;

    word_bits_.assign(words_, Bits(blocks_, 0));
    for (std::size_t w = 0; w < words_; ++w) {
        for (const auto& f : qa.contexts[w]) {
            auto bit = static_cast<std::size_t>(
                std::lower_bound(universe.begin(), universe.end(), f) - universe.begin());
            word_bits_[w][bit / 64] |= std::uint64_t{1} << (bit % 64);
        }
    }
    std::vector<char> hit(sentences.size(), 0);
    for (std::size_t bit = 0; bit < universe.size(); ++bit) {
        auto id = sentences.features().find(universe[bit]);
        if (!id) continue;
        universe_.emplace_back(*id, bit);
        for (auto s : sentences.postings(*id)) {
            if (!hit[s]) touched_.push_back(s);
            hit[s] = 1;
        }
    }
    std::sort(touched_.begin(), touched_.end());
}

SubsetMatcher::Bits SubsetMatcher::sentence_bits(std::size_t sentence) const
{
    Bits bits(blocks_, 0);
    auto row = sentences_->row(sentence);
    for (const auto& [id, bit] : universe_) {
        if (std::binary_search(row.begin(), row.end(), id)) bits[bit / 64] |= std::uint64_t{1} << (bit % 64);
    }
    return bits;
}

namespace {

std::size_t popcount(const std::vector<std::uint64_t>& bits)
{
    std::size_t n = 0;
    for (auto b : bits) n += static_cast<std::size_t>(std::popcount(b));
    return n;
}

std::size_t popcount_and(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return n;
}

}  // namespace

std::vector<std::size_t> SubsetMatcher::candidates(std::size_t sentence) const
{
    std::vector<std::size_t> all(words_);
    for (std::size_t w = 0; w < words_; ++w) all[w] = w;
    if (words_ <= cap_) return all;

    auto bits = sentence_bits(sentence);
    std::vector<std::size_t> hits(words_);
    std::vector<std::size_t> sizes(words_);
    for (std::size_t w = 0; w < words_; ++w) {
        hits[w] = popcount_and(word_bits_[w], bits);
        sizes[w] = qa_->contexts[w].size();
    }
    // Most sentence overlap first; among equals, smaller contexts cost less
    // in the denominator.
    std::sort(all.begin(), all.end(), [&](std::size_t a, std::size_t b) {
        if (hits[a] != hits[b]) return hits[a] > hits[b];
        if (sizes[a] != sizes[b]) return sizes[a] < sizes[b];
        return a < b;
    });
    all.resize(cap_);
    std::sort(all.begin(), all.end());
    return all;
}

double SubsetMatcher::score(std::size_t sentence) const
{
    if (words_ == 0) return 0.0;
    auto bits = sentence_bits(sentence);
    if (popcount(bits) == 0) return 0.0;
    auto pool = candidates(sentence);
    const std::size_t max_size = std::min(m_, pool.size());
    const double m = static_cast<double>(m_);

    double best = 0.0;
    // Depth-first over subsets in lexicographic order of pool positions.
    std::vector<Bits> unions(max_size + 1, Bits(blocks_, 0));
    auto visit = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
        for (std::size_t i = start; i < pool.size(); ++i) {
            auto& cur = unions[depth + 1];
            const auto& prev = unions[depth];
            const auto& add = word_bits_[pool[i]];
            for (std::size_t b = 0; b < blocks_; ++b) cur[b] = prev[b] | add[b];
            std::size_t size = popcount(cur);
            if (size > 0) {
                double match = static_cast<double>(popcount_and(cur, bits)) / static_cast<double>(size);
                double value = match * (static_cast<double>(depth + 1) / m);
                best = std::max(best, value);
            }
            if (depth + 1 < max_size) self(self, i + 1, depth + 1);
        }
    };
    visit(visit, 0, 0);
    return best;
}

double top_k_mean(std::vector<double> scores, std::size_t k)
{
    if (k == 0) return 0.0;
    auto n = std::min(k, scores.size());
    std::partial_sort(scores.begin(), scores.begin() + static_cast<std::ptrdiff_t>(n), scores.end(),
        std::greater<>());
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += scores[i];
    return sum / static_cast<double>(k);
}

std::pair<double, double> step4(const QAPair& qa, const space::SentenceSpace& sentences, const BeamConfig& cfg)
{
    double whole = 0.0;
    if (!qa.ngrams.empty()) {
        std::vector<std::uint32_t> counts(sentences.size(), 0);
        std::vector<std::size_t> touched;
        for (auto f : sentences.features().lookup(qa.ngrams)) {
            for (auto s : sentences.postings(f)) {
                if (counts[s]++ == 0) touched.push_back(s);
            }
        }
        std::vector<double> scores;
        scores.reserve(touched.size());
        const double n = static_cast<double>(qa.ngrams.size());
        for (auto s : touched) scores.push_back(static_cast<double>(counts[s]) / n);
        whole = top_k_mean(std::move(scores), cfg.k_sentences);
    }

    SubsetMatcher matcher(qa, sentences, cfg);
    std::vector<double> scores;
    scores.reserve(matcher.touched().size());
    for (auto s : matcher.touched()) scores.push_back(matcher.score(s));
    double subset = top_k_mean(std::move(scores), cfg.k_sentences);
    return {whole, subset};
}

ScoreBreakdown score_pair(const QAPair& qa, const space::SpaceProvider& spaces, const BeamConfig& cfg,
    const AblationMask& mask)
{
    cfg.validate();
    ScoreBreakdown out;
    const auto& terms = spaces.terminology();
    auto s1 = step1(qa, terms, cfg, mask);
    out.beam[0] = s1;
    auto s2 = step2(std::move(s1), qa, terms, cfg, mask);
    out.beam[1] = s2;
    auto s3 = step3(std::move(s2), qa, spaces, cfg, mask);
    out.beam[2] = s3;
    if (s3.empty()) return out;

    for (auto& ts : s3) {
        auto sentences = spaces.sentence_space(ts.term);
        auto [whole, subset] = step4(qa, *sentences, cfg);
        ts.sub[sentence_whole] = whole;
        ts.sub[sentence_subset] = subset;
        ts.mean = mask.mean(ts.sub);
    }
    rank(s3);
    keep_top(s3, 1);
    out.beam[3] = s3;
    out.selected_term = s3.front().term;
    out.subscores = s3.front().sub;
    out.final_score = s3.front().mean;
    return out;
}

AnswerResult answer_question(const text::TokenList& question, const std::vector<text::TokenList>& choices,
    const space::SpaceProvider& spaces, const BeamConfig& cfg, const AblationMask& mask)
{
    if (choices.size() < 2) throw std::invalid_argument("a question needs at least two choices");
    QAOptions options;
    options.conjunctions = spaces.build_options().terminology.conjunctions;
    options.context_window = spaces.build_options().words.window;

    AnswerResult result;
    double best = -1.0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        auto qa = make_qa_pair(question, choices[i], options);
        auto breakdown = score_pair(qa, spaces, cfg, mask);
        breakdown.choice_index = i;
        if (breakdown.final_score > best) {
            best = breakdown.final_score;
            result.best.clear();
        }
        if (breakdown.final_score == best) result.best.push_back(i);
        result.breakdowns.push_back(std::move(breakdown));
    }
    return result;
}

}  // namespace lexqa::score
