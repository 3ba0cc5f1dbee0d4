#pragma once

#include <cmath>
#include <cstdint>

namespace lexqa::space {

inline double log_count(std::uint64_t count)
{
    return std::log10(static_cast<double>(count) + 1.0);
}

/// Normalized tf-idf weight in [0, 1]:
///   TF  = log10(tf + 1) / row_max_logtf
///   IDF = 1 - log10(df + 1) / global_max_logdf
/// Throws std::domain_error when either maximum is not positive.
double tfidf_weight(std::uint64_t tf, double row_max_logtf, std::uint64_t df,
    double global_max_logdf);

inline int binarize(double weight)
{
    return weight > 0.0 ? 1 : 0;
}

}  // namespace lexqa::space
