#include "lexqa/text/utf8.hpp"

namespace lexqa::text {

namespace {

// Length of the well-formed sequence starting at s[i], or 0 if ill-formed.
std::size_t sequence_length(std::string_view s, std::size_t i)
{
    auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char c = byte(i);
    if (c < 0x80) return 1;
    std::size_t len = 0;
    unsigned char lo = 0x80;
    unsigned char hi = 0xBF;
    if (c >= 0xC2 && c <= 0xDF) {
        len = 2;
    } else if (c >= 0xE0 && c <= 0xEF) {
        len = 3;
        if (c == 0xE0) lo = 0xA0;
        if (c == 0xED) hi = 0x9F;
    } else if (c >= 0xF0 && c <= 0xF4) {
        len = 4;
        if (c == 0xF0) lo = 0x90;
        if (c == 0xF4) hi = 0x8F;
    } else {
        return 0;
    }
    if (i + len > s.size()) return 0;
    if (byte(i + 1) < lo || byte(i + 1) > hi) return 0;
    for (std::size_t k = 2; k < len; ++k) {
        if (byte(i + k) < 0x80 || byte(i + k) > 0xBF) return 0;
    }
    return len;
}

}  // namespace

std::string sanitize_utf8(std::string_view in, std::size_t& dropped)
{
    std::string out;
    out.reserve(in.size());
    bool in_bad_span = false;
    std::size_t i = 0;
    while (i < in.size()) {
        std::size_t len = sequence_length(in, i);
        if (len == 0) {
            if (!in_bad_span) ++dropped;
            in_bad_span = true;
            ++i;
            continue;
        }
        in_bad_span = false;
        out.append(in.substr(i, len));
        i += len;
    }
    return out;
}

}  // namespace lexqa::text
