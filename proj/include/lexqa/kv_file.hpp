#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace lexqa {

/// `key = value` lines; '#' starts a comment. Keys keep file order only
/// through std::map ordering.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(const std::string& text, const std::string& origin = "<string>");
KeyValues read_key_values(const std::filesystem::path& path);
void write_key_values(const std::filesystem::path& path, const KeyValues& values);

/// Throws std::runtime_error naming the key when missing or malformed.
const std::string& require(const KeyValues& kv, const std::string& key);
long long require_int(const KeyValues& kv, const std::string& key);
double require_double(const KeyValues& kv, const std::string& key);

}  // namespace lexqa
