#pragma once

#include <string>
#include <string_view>

namespace lexqa::text {

/// The Porter (1980) suffix-stripping stemmer, following Martin Porter's
/// reference ANSI C implementation (including its "bli" and "logi" rules).
/// Input is expected to be lowercase; words of length <= 2 are returned as is.
std::string porter_stem(std::string_view word);

}  // namespace lexqa::text
