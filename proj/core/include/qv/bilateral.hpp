#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// One summand prefactor / (1 - pole) of a bilateral sum; no pole means a plain monomial.
struct bilateral_term {
    monomial prefactor;
    std::optional<monomial> pole;
};

// r -> summand. The valuation bound of the expanded summand (see
// valuation_bound) must be convex in r, which holds for every quadratic
// prefactor exponent with a pole exponent linear in r.
struct bilateral_term_stream {
    std::function<bilateral_term(std::int64_t)> term_at;
};

// Least q-exponent the expanded summand can contribute.
rational valuation_bound(const bilateral_term &t);

// Number of consecutive non-improving index steps tolerated before DivergentSum.
inline constexpr int divergence_window = 16;

struct bilateral_options {
    // Extra indices summed past the stopping point on each tail (0 in normal use;
    // tests widen it to check truncation soundness).
    std::int64_t extra_indices = 0;
};

// Sum over r in Z, exact below `order`. Poles are expanded geometrically after
// rewriting 1/(1-mu) = -mu^{-1}/(1-mu^{-1}) when mu has negative valuation.
// Throws non_generic_parameters when some pole equals 1, formal_pole when a
// pole carries formal symbols at valuation 0, divergent_sum when the bound stalls.
series sum_bilateral(const bilateral_term_stream &stream, const rational &order,
                     const bilateral_options &opts = {});

} // namespace qv
