#include "lexqa/space/space_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lexqa/kv_file.hpp"

namespace lexqa::space {

namespace fs = std::filesystem;

namespace {

std::string format_double(double v)
{
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

std::ofstream open_out(const fs::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

std::ifstream open_in(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return in;
}

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        parts.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) break;
        start = tab + 1;
    }
    return parts;
}

std::uint32_t parse_u32(const std::string& s, const fs::path& file, std::size_t lineno)
{
    try {
        std::size_t used = 0;
        auto v = std::stoull(s, &used);
        if (used == s.size() && v <= 0xFFFFFFFFull) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
    throw std::runtime_error(file.string() + ":" + std::to_string(lineno) + ": bad count '" + s + "'");
}

void check_format(const KeyValues& kv, const std::string& expected, const fs::path& where)
{
    if (require(kv, "format") != expected) {
        throw std::runtime_error(where.string() + ": expected format " + expected);
    }
    if (require_int(kv, "version") != kSpaceFormatVersion) {
        throw std::runtime_error(where.string() + ": unsupported format version");
    }
}

void write_df(const CountMatrix& m, const fs::path& path)
{
    auto out = open_out(path);
    for (std::uint32_t f = 0; f < m.features().size(); ++f) {
        out << m.features()[f].key << '\t' << m.df(f) << '\n';
    }
}

// Returns the dictionary and the stored df column.
std::pair<FeatureDictionary, std::vector<std::uint32_t>> read_df(const fs::path& path)
{
    auto in = open_in(path);
    std::vector<FeatureId> features;
    std::vector<std::uint32_t> df;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto parts = split_tabs(line);
        if (parts.size() != 2) throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected 2 columns");
        features.push_back(FeatureId::from_key(parts[0]));
        df.push_back(parse_u32(parts[1], path, lineno));
    }
    return {FeatureDictionary(std::move(features)), std::move(df)};
}

void verify_df(const CountMatrix& m, const std::vector<std::uint32_t>& stored, const fs::path& where)
{
    for (std::uint32_t f = 0; f < stored.size(); ++f) {
        if (m.df(f) != stored[f]) {
            throw std::runtime_error(where.string() + ": df mismatch for " + m.features()[f].key);
        }
    }
}

void put_u32(std::ostream& out, std::uint32_t v)
{
    std::array<char, 4> b{static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
        static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
    out.write(b.data(), 4);
}

std::uint32_t get_u32(std::istream& in)
{
    std::array<unsigned char, 4> b{};
    in.read(reinterpret_cast<char*>(b.data()), 4);
    if (!in) throw std::runtime_error("truncated postings file");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8)
        | (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

void save_terminology_space(const TerminologySpace& space, const fs::path& dir)
{
    fs::create_directories(dir / "rows");
    const auto& m = space.matrix();
    write_key_values(dir / "manifest.txt",
        {{"format", "lexqa-terminology"}, {"version", std::to_string(kSpaceFormatVersion)},
            {"rows", std::to_string(space.size())}, {"features", std::to_string(m.features().size())},
            {"global_max_logdf", format_double(m.max_logdf())}});
    {
        auto out = open_out(dir / "terms.tsv");
        for (std::size_t r = 0; r < space.size(); ++r) {
            out << space.term_id(r) << '\t' << format_double(m.row_max_logtf(r)) << '\n';
        }
    }
    write_df(m, dir / "df.tsv");
    for (std::size_t r = 0; r < space.size(); ++r) {
        auto out = open_out(dir / "rows" / (std::to_string(space.term_id(r)) + ".tsv"));
        for (const auto& e : m.row(r)) out << m.features()[e.feature].key << '\t' << e.tf << '\n';
    }
    auto out = open_out(dir / "postings.bin");
    out.write("LQPL", 4);
    put_u32(out, kSpaceFormatVersion);
    put_u32(out, static_cast<std::uint32_t>(m.features().size()));
    for (std::uint32_t f = 0; f < m.features().size(); ++f) {
        auto list = space.postings(f);
        put_u32(out, static_cast<std::uint32_t>(list.size()));
        for (const auto& p : list) {
            put_u32(out, space.term_id(p.row));
            put_u32(out, p.tf);
        }
    }
    if (!out) throw std::runtime_error("failed writing postings");
}

TerminologySpace load_terminology_space(const fs::path& dir)
{
    auto manifest = read_key_values(dir / "manifest.txt");
    check_format(manifest, "lexqa-terminology", dir);

    std::vector<TermId> ids;
    {
        auto in = open_in(dir / "terms.tsv");
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto parts = split_tabs(line);
            if (parts.size() != 2) throw std::runtime_error("terms.tsv:" + std::to_string(lineno) + ": expected 2 columns");
            ids.push_back(parse_u32(parts[0], dir / "terms.tsv", lineno));
        }
    }
    auto [dictionary, stored_df] = read_df(dir / "df.tsv");
    std::vector<std::vector<CountEntry>> rows(ids.size());
    for (std::size_t r = 0; r < ids.size(); ++r) {
        auto path = dir / "rows" / (std::to_string(ids[r]) + ".tsv");
        auto in = open_in(path);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto parts = split_tabs(line);
            if (parts.size() != 2) throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected 2 columns");
            auto f = dictionary.find(FeatureId::from_key(parts[0]));
            if (!f) throw std::runtime_error(path.string() + ": feature not in df.tsv: " + parts[0]);
            rows[r].push_back({*f, parse_u32(parts[1], path, lineno)});
        }
    }
    if (static_cast<long long>(ids.size()) != require_int(manifest, "rows")
        || static_cast<long long>(dictionary.size()) != require_int(manifest, "features")) {
        throw std::runtime_error(dir.string() + ": manifest dimensions do not match data");
    }
    auto matrix = CountMatrix::build(std::move(dictionary), std::move(rows));
    verify_df(matrix, stored_df, dir / "df.tsv");
    if (format_double(matrix.max_logdf()) != require(manifest, "global_max_logdf")) {
        throw std::runtime_error(dir.string() + ": global_max_logdf does not match data");
    }
    TerminologySpace space(std::move(ids), std::move(matrix));

    auto in = open_in(dir / "postings.bin");
    std::array<char, 4> magic{};
    in.read(magic.data(), 4);
    if (!in || std::string(magic.data(), 4) != "LQPL") throw std::runtime_error("bad postings magic");
    if (get_u32(in) != kSpaceFormatVersion) throw std::runtime_error("unsupported postings version");
    if (get_u32(in) != space.features().size()) throw std::runtime_error("postings feature count mismatch");
    for (std::uint32_t f = 0; f < space.features().size(); ++f) {
        auto expected = space.postings(f);
        if (get_u32(in) != expected.size()) throw std::runtime_error("postings length mismatch");
        for (const auto& p : expected) {
            auto term = get_u32(in);
            auto tf = get_u32(in);
            if (term != space.term_id(p.row) || tf != p.tf) throw std::runtime_error("postings content mismatch");
        }
    }
    return space;
}

void save_word_space(const WordSpace& space, const fs::path& dir)
{
    fs::create_directories(dir);
    const auto& m = space.matrix();
    write_key_values(dir / "manifest.txt",
        {{"format", "lexqa-word-space"}, {"version", std::to_string(kSpaceFormatVersion)},
            {"term_id", std::to_string(space.term_id())}, {"rows", std::to_string(space.size())},
            {"features", std::to_string(m.features().size())},
            {"max_logdf", format_double(m.max_logdf())}});
    write_df(m, dir / "df.tsv");
    {
        auto stems = open_out(dir / "stems.tsv");
        for (const auto& stem : space.stems()) stems << stem << '\n';
    }
    auto out = open_out(dir / "rows.tsv");
    for (std::size_t r = 0; r < space.size(); ++r) {
        for (const auto& e : m.row(r)) {
            out << space.stem(r) << '\t' << m.features()[e.feature].key << '\t' << e.tf << '\n';
        }
    }
    if (!out) throw std::runtime_error("failed writing " + (dir / "rows.tsv").string());
}

WordSpace load_word_space(const fs::path& dir)
{
    auto manifest = read_key_values(dir / "manifest.txt");
    check_format(manifest, "lexqa-word-space", dir);
    auto [dictionary, stored_df] = read_df(dir / "df.tsv");

    std::vector<std::string> stems;
    {
        auto in = open_in(dir / "stems.tsv");
        std::string line;
        while (std::getline(in, line)) stems.push_back(line);
    }
    if (static_cast<long long>(stems.size()) != require_int(manifest, "rows")) {
        throw std::runtime_error(dir.string() + ": row count mismatch");
    }
    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t i = 0; i < stems.size(); ++i) row_of.emplace(stems[i], i);
    std::vector<std::vector<CountEntry>> rows(stems.size());
    auto path = dir / "rows.tsv";
    auto in = open_in(path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto parts = split_tabs(line);
        if (parts.size() != 3) throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected 3 columns");
        auto r = row_of.find(parts[0]);
        if (r == row_of.end()) throw std::runtime_error(path.string() + ": unknown row word " + parts[0]);
        auto f = dictionary.find(FeatureId::from_key(parts[1]));
        if (!f) throw std::runtime_error(path.string() + ": feature not in df.tsv: " + parts[1]);
        rows[r->second].push_back({*f, parse_u32(parts[2], path, lineno)});
    }
    auto matrix = CountMatrix::build(std::move(dictionary), std::move(rows));
    verify_df(matrix, stored_df, dir / "df.tsv");
    return WordSpace(static_cast<corpus::TermId>(require_int(manifest, "term_id")), std::move(stems),
        std::move(matrix));
}

void save_sentence_manifest(const SentenceSpace& space, const fs::path& file)
{
    fs::create_directories(file.parent_path());
    write_key_values(file,
        {{"format", "lexqa-sentence-space"}, {"version", std::to_string(kSpaceFormatVersion)},
            {"term_id", std::to_string(space.term_id())}, {"rows", std::to_string(space.size())},
            {"features", std::to_string(space.features().size())}});
}

SentenceManifest load_sentence_manifest(const fs::path& file)
{
    auto kv = read_key_values(file);
    check_format(kv, "lexqa-sentence-space", file);
    return {static_cast<corpus::TermId>(require_int(kv, "term_id")),
        static_cast<std::uint64_t>(require_int(kv, "rows")),
        static_cast<std::uint64_t>(require_int(kv, "features"))};
}

}  // namespace lexqa::space
