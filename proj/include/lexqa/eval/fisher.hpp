#pragma once

#include <cstdint>

namespace lexqa::eval {

/// Two-sided Fisher exact test for the table
///     | a  b |
///     | c  d |
/// summing the hypergeometric probabilities (margins fixed) of every table
/// no more probable than the observed one. An all-zero table gives 1.
double fisher_exact_2x2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

}  // namespace lexqa::eval
