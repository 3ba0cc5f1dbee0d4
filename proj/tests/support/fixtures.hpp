#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "lexqa/text/analyzer.hpp"

namespace fixtures {

inline const lexqa::text::Analyzer& analyzer()
{
    static const lexqa::text::Analyzer instance;
    return instance;
}

inline lexqa::text::TokenList toks(const std::string& text)
{
    return analyzer().tokenize(text);
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag)
    {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("lexqa-" + tag + "-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::error_code ec; std::filesystem::remove_all(path_, ec); }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

}  // namespace fixtures
