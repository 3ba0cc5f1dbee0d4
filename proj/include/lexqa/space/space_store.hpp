#pragma once

#include <filesystem>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lexqa/corpus/pseudo_docs.hpp"
#include "lexqa/space/sentence_space.hpp"
#include "lexqa/space/terminology_space.hpp"
#include "lexqa/space/word_space.hpp"

namespace lexqa::space {

struct SpaceBuildOptions {
    TerminologyOptions terminology{};
    WordSpaceOptions words{};
    unsigned threads = 0;
};

/// Read access to the three kinds of spaces. Implementations are safe to
/// share between concurrent scorers.
class SpaceProvider {
public:
    virtual ~SpaceProvider() = default;

    virtual const TerminologySpace& terminology() const = 0;
    virtual std::shared_ptr<const WordSpace> word_space(TermId term) const = 0;
    virtual std::shared_ptr<const SentenceSpace> sentence_space(TermId term) const = 0;
    /// Options the spaces were built with; queries must use the same windows.
    virtual const SpaceBuildOptions& build_options() const = 0;
    virtual std::string term_phrase(TermId term) const = 0;
};

/// Every space held in memory.
class InMemorySpaces final : public SpaceProvider {
public:
    static InMemorySpaces build(const std::vector<corpus::PseudoDocument>& docs,
        const SpaceBuildOptions& options = {}, std::vector<std::string>* warnings = nullptr);

    const TerminologySpace& terminology() const override { return terminology_; }
    std::shared_ptr<const WordSpace> word_space(TermId term) const override;
    std::shared_ptr<const SentenceSpace> sentence_space(TermId term) const override;
    const SpaceBuildOptions& build_options() const override { return options_; }
    std::string term_phrase(TermId term) const override;

    /// Writes terminology/, words/, sentences/ and manifest.txt under `dir`.
    /// `pseudo_doc_dir` is recorded so sentence spaces can be rebuilt on load.
    void save(const std::filesystem::path& dir, const std::filesystem::path& pseudo_doc_dir) const;

private:
    SpaceBuildOptions options_;
    TerminologySpace terminology_;
    std::map<TermId, std::shared_ptr<const WordSpace>> words_;
    std::map<TermId, std::shared_ptr<const SentenceSpace>> sentences_;
    std::map<TermId, std::string> phrases_;
};

/// Terminology space in memory; word and sentence spaces loaded on first
/// use and kept in a small LRU cache.
class DiskSpaces final : public SpaceProvider {
public:
    DiskSpaces(const std::filesystem::path& dir, const text::Analyzer& analyzer,
        std::size_t cache_capacity = 32);

    const TerminologySpace& terminology() const override { return terminology_; }
    std::shared_ptr<const WordSpace> word_space(TermId term) const override;
    std::shared_ptr<const SentenceSpace> sentence_space(TermId term) const override;
    const SpaceBuildOptions& build_options() const override { return options_; }
    std::string term_phrase(TermId term) const override;

private:
    template <class T>
    struct Cache {
        std::list<std::pair<TermId, std::shared_ptr<const T>>> entries;  // most recent first
    };

    template <class T, class Load>
    std::shared_ptr<const T> cached(Cache<T>& cache, TermId term, Load&& load) const;

    std::filesystem::path dir_;
    std::filesystem::path pseudo_doc_dir_;
    const text::Analyzer* analyzer_;
    std::size_t capacity_;
    SpaceBuildOptions options_;
    TerminologySpace terminology_;
    std::map<TermId, std::string> phrases_;
    mutable std::mutex mutex_;
    mutable Cache<WordSpace> word_cache_;
    mutable Cache<SentenceSpace> sentence_cache_;
};

}  // namespace lexqa::space
