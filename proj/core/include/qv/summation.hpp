#pragma once

#include <cstdint>

#include <qv/errors.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// Sums term(n) for n = n0, n0 + 1, ... below `order`. floor(n) is a lower bound
// on val(term(n)); the sum stops once the floor reaches the order and is no
// longer decreasing.
template <typename Term, typename Floor>
series sum_while_below(const rational &order, Term &&term, Floor &&floor, std::int64_t n0 = 0)
{
    constexpr int window = 16;
    constexpr std::int64_t max_terms = 1000000;
    series total = series::zero(order);
    int stalled = 0;
    for (std::int64_t n = n0;; ++n) {
        rational f = floor(n);
        rational f_next = floor(n + 1);
        if (f >= order && f_next >= f) {
            break;
        }
        stalled = f_next <= f ? stalled + 1 : 0;
        if (stalled >= window || n - n0 > max_terms) {
            throw divergent_sum("summand valuation does not grow");
        }
        total += term(n);
    }
    return total;
}

} // namespace qv
