#include "lexqa/eval/fisher.hpp"

#include <algorithm>
#include <cmath>

namespace lexqa::eval {

namespace {

double log_choose(double n, double k)
{
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

double fisher_exact_2x2(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d)
{
    const double row1 = static_cast<double>(a + b);
    const double row2 = static_cast<double>(c + d);
    const double col1 = static_cast<double>(a + c);
    const double n = row1 + row2;
    if (n == 0.0) return 1.0;

    const auto lo = static_cast<std::uint64_t>(std::max(0.0, col1 - row2));
    const auto hi = static_cast<std::uint64_t>(std::min(row1, col1));
    const double log_denominator = log_choose(n, col1);
    auto log_p = [&](std::uint64_t x) {
        auto xd = static_cast<double>(x);
        return log_choose(row1, xd) + log_choose(row2, col1 - xd) - log_denominator;
    };
    const double observed = log_p(a);
    // Relative slack so tables tied with the observed one are not lost to rounding.
    const double threshold = observed + 1e-7;
    double p = 0.0;
    for (std::uint64_t x = lo; x <= hi; ++x) {
        double lp = log_p(x);
        if (lp <= threshold) p += std::exp(lp);
    }
    return std::min(1.0, p);
}

}  // namespace lexqa::eval
