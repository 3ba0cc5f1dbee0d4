#include "lexqa/space/weighting.hpp"

#include <stdexcept>

namespace lexqa::space {

double tfidf_weight(std::uint64_t tf, double row_max_logtf, std::uint64_t df, double global_max_logdf)
{
    if (!(row_max_logtf > 0.0) || !(global_max_logdf > 0.0)) {
        throw std::domain_error("tf-idf weight undefined: zero normalizer (empty space?)");
    }
    if (tf == 0) return 0.0;
    if (df == 0) throw std::domain_error("tf-idf weight: nonzero tf with zero df");
    double tf_part = log_count(tf) / row_max_logtf;
    double idf_part = 1.0 - log_count(df) / global_max_logdf;
    return tf_part * idf_part;
}

}  // namespace lexqa::space
