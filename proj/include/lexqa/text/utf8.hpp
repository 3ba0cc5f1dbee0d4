#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace lexqa::text {

/// Copy of `in` with every ill-formed UTF-8 sequence removed.
/// `dropped` is incremented once per skipped span.
std::string sanitize_utf8(std::string_view in, std::size_t& dropped);

}  // namespace lexqa::text
