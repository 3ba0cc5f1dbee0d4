#include <doctest.h>

#include <fstream>
#include <thread>

#include "fixtures.hpp"
#include "synthetic.hpp"
#include "lexqa/space/space_store.hpp"

using namespace lexqa;
using namespace lexqa::space;
using fixtures::analyzer;

namespace {

struct Built {
    fixtures::TempDir root{"store"};
    corpus::PseudoDocSet set;
    InMemorySpaces memory;
};

std::unique_ptr<Built> build_and_save()
{
    auto b = std::make_unique<Built>();
    auto corpus = synth::make_topic_corpus(5, 30, 2, 61);
    std::vector<text::Sentence> sentences;
    for (std::size_t i = 0; i < corpus.sentences.size(); ++i) {
        sentences.push_back({corpus.sentences[i], analyzer().tokenize(corpus.sentences[i]), i});
    }
    corpus::TermBank bank;
    for (const auto& t : corpus.topics) bank.add(t.term, analyzer());
    b->set = corpus::build_pseudo_documents(sentences, bank);
    corpus::save_pseudo_documents(b->set, b->root.path() / "pdocs");
    b->memory = InMemorySpaces::build(b->set.documents);
    b->memory.save(b->root.path() / "spaces", b->root.path() / "pdocs");
    return b;
}

}  // namespace

TEST_SUITE("space_store") {

TEST_CASE("disk spaces load what memory spaces saved")
{
    auto b = build_and_save();
    DiskSpaces disk(b->root.path() / "spaces", analyzer(), 2);
    CHECK(disk.terminology().term_ids() == b->memory.terminology().term_ids());
    CHECK(disk.build_options().words.window == 3);
    CHECK(disk.build_options().terminology.min_support == 10);
    for (auto id : b->memory.terminology().term_ids()) {
        CHECK(disk.term_phrase(id) == b->memory.term_phrase(id));
        auto w1 = disk.word_space(id);
        auto w2 = b->memory.word_space(id);
        CHECK(w1->stems() == w2->stems());
        CHECK(w1->matrix().features().features() == w2->matrix().features().features());
        auto s1 = disk.sentence_space(id);
        auto s2 = b->memory.sentence_space(id);
        REQUIRE(s1->size() == s2->size());
        for (std::size_t r = 0; r < s1->size(); ++r) {
            CHECK(std::equal(s1->row(r).begin(), s1->row(r).end(), s2->row(r).begin(), s2->row(r).end()));
        }
    }
    CHECK_THROWS_AS(disk.word_space(999), std::out_of_range);
    CHECK_THROWS_AS(b->memory.sentence_space(999), std::out_of_range);
}

TEST_CASE("cache hits return the same object and concurrent readers agree")
{
    auto b = build_and_save();
    DiskSpaces disk(b->root.path() / "spaces", analyzer(), 3);
    auto first = disk.word_space(0);
    CHECK(disk.word_space(0).get() == first.get());

    std::vector<std::thread> workers;
    std::vector<std::size_t> sizes(8);
    for (std::size_t t = 0; t < sizes.size(); ++t) {
        workers.emplace_back([&, t] {
            std::size_t total = 0;
            for (int rep = 0; rep < 20; ++rep) {
                for (corpus::TermId id = 0; id < 5; ++id) total += disk.sentence_space(id)->size();
            }
            sizes[t] = total;
        });
    }
    for (auto& w : workers) w.join();
    for (auto s : sizes) CHECK(s == sizes[0]);
}

TEST_CASE("a changed pseudo-document is detected")
{
    auto b = build_and_save();
    {
        std::ofstream out(b->root.path() / "pdocs" / "term_1.txt", std::ios::app);
        out << "An extra line about nothing.\n";
    }
    DiskSpaces disk(b->root.path() / "spaces", analyzer());
    CHECK_THROWS(disk.sentence_space(1));
}

TEST_CASE("a directory without a manifest is rejected")
{
    fixtures::TempDir empty("empty");
    CHECK_THROWS(DiskSpaces(empty.path(), analyzer()));
}

}  // TEST_SUITE
