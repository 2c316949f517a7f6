#include <qv/bilateral.hpp>

#include <qv/accumulator.hpp>
#include <qv/errors.hpp>

namespace qv {

namespace {

constexpr std::int64_t kMaxIndex = 1'000'000;

// Expands prefactor * sum_k mu^k for val(mu) > 0 into the accumulator.
void expand_geometric(series_accumulator &acc, monomial p, const monomial &mu, const rational &order)
{
    while (p.q_exp() < order) {
        acc.add(p);
        p = p * mu;
    }
}

void expand_term(series_accumulator &acc, const bilateral_term &t, const rational &order)
{
    if (!t.pole) {
        if (t.prefactor.q_exp() < order) {
            acc.add(t.prefactor);
        }
        return;
    }
    const monomial &mu = *t.pole;
    if (mu.q_exp() > 0) {
        expand_geometric(acc, t.prefactor, mu, order);
    } else if (mu.q_exp() < 0) {
        // 1/(1 - mu) = -mu^{-1} / (1 - mu^{-1})
        monomial inv = mu.inverse();
        expand_geometric(acc, -(t.prefactor * inv), inv, order);
    } else if (mu.has_symbols()) {
        throw formal_pole("pole factor 1/(1 - " + mu.to_string() + ") is not expandable");
    } else if (mu.scalar() == 1) {
        throw non_generic_parameters("vanishing denominator 1 - " + mu.to_string());
    } else if (t.prefactor.q_exp() < order) {
        acc.add(monomial(t.prefactor.scalar() / (1 - mu.scalar()), t.prefactor.q_exp(), t.prefactor.syms()));
    }
}

void sum_tail(series_accumulator &acc, const bilateral_term_stream &stream, const rational &order,
              std::int64_t start, std::int64_t dir, std::int64_t extra)
{
    rational prev = valuation_bound(stream.term_at(start - dir));
    rational prev_diff;
    bool have_diff = false;
    int stalled = 0;
    std::int64_t past = -1;
    for (std::int64_t r = start;; r += dir) {
        if (r > kMaxIndex || r < -kMaxIndex) {
            throw divergent_sum("bilateral sum did not terminate");
        }
        bilateral_term t = stream.term_at(r);
        rational b = valuation_bound(t);
        if (past < 0 && b >= order && b >= prev) {
            past = 0;
        }
        if (past >= 0) {
            if (past >= extra) {
                return;
            }
            ++past;
        }
        expand_term(acc, t, order);
        rational diff = b - prev;
        if (b < order && diff <= 0 && have_diff && diff <= prev_diff) {
            if (++stalled >= divergence_window) {
                throw divergent_sum("valuation bound stalled below the truncation order");
            }
        } else {
            stalled = 0;
        }
        prev_diff = diff;
        have_diff = true;
        prev = b;
    }
}

} // namespace

rational valuation_bound(const bilateral_term &t)
{
    rational b = t.prefactor.q_exp();
    if (t.pole && t.pole->q_exp() < 0) {
        b -= t.pole->q_exp();
    }
    return b;
}

series sum_bilateral(const bilateral_term_stream &stream, const rational &order, const bilateral_options &opts)
{
    series_accumulator acc;
    sum_tail(acc, stream, order, 0, 1, opts.extra_indices);
    sum_tail(acc, stream, order, -1, -1, opts.extra_indices);
    return acc.build(order);
}

} // namespace qv
