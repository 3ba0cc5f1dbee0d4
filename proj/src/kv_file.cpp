#include "lexqa/kv_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lexqa {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValues parse_key_values(const std::string& text, const std::string& origin)
{
    KeyValues kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
        }
        auto key = trim(line.substr(0, eq));
        if (key.empty()) throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = trim(line.substr(eq + 1));
    }
    return kv;
}

KeyValues read_key_values(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_key_values(buf.str(), path.string());
}

void write_key_values(const std::filesystem::path& path, const KeyValues& values)
{
    std::ofstream out(path);
    for (const auto& [k, v] : values) out << k << " = " << v << '\n';
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

const std::string& require(const KeyValues& kv, const std::string& key)
{
    auto it = kv.find(key);
    if (it == kv.end()) throw std::runtime_error("missing key: " + key);
    return it->second;
}

long long require_int(const KeyValues& kv, const std::string& key)
{
    const auto& v = require(kv, key);
    std::size_t used = 0;
    long long n = 0;
    try {
        n = std::stoll(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw std::runtime_error("key " + key + ": not an integer: " + v);
    return n;
}

double require_double(const KeyValues& kv, const std::string& key)
{
    const auto& v = require(kv, key);
    std::size_t used = 0;
    double d = 0;
    try {
        d = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != v.size()) throw std::runtime_error("key " + key + ": not a number: " + v);
    return d;
}

}  // namespace lexqa
