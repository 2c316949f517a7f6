#pragma once

#include <stdexcept>

#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// Evaluates f(order + pad) with growing pad until the result is exact below
// `order`, then truncates to exactly `order`. Needed wherever negative
// valuations (q-power prefactors, divisions) eat into the working order.
template <typename F>
series at_order(const rational &order, F &&f)
{
    rational pad = 0;
    for (int attempt = 0; attempt < 32; ++attempt) {
        series s = f(rational(order + pad));
        if (s.is_exact() || *s.trunc() >= order) {
            return s.truncated(order);
        }
        rational deficit = order - *s.trunc();
        pad += deficit > 1 ? deficit : rational(1);
    }
    throw std::runtime_error("could not reach the requested truncation order");
}

} // namespace qv
