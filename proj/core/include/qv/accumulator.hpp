#pragma once

#include <map>

#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// Collects monomials with arbitrary rational q-exponents into a series.
class series_accumulator {
public:
    void add(const monomial &m)
    {
        terms_[m.q_exp()].add_scaled_monomial(coefficient(1), m.scalar(), m.syms());
    }

    void add(const rational &q_exp, const coefficient &c)
    {
        terms_[q_exp] += c;
    }

    // Series exact below `order`; contributions at or past `order` are dropped.
    series build(const rational &order) const
    {
        std::int64_t den = to_int64(order.get_den());
        for (const auto &[e, c] : terms_) {
            if (e < order && !c.is_zero()) {
                den = lcm_den(den, e);
            }
        }
        std::vector<series::term> out;
        for (const auto &[e, c] : terms_) {
            if (e >= order) {
                break;
            }
            if (!c.is_zero()) {
                out.emplace_back(to_units(e, den), c);
            }
        }
        return series(den, to_units(order, den), std::move(out));
    }

private:
    std::map<rational, coefficient> terms_;
};

} // namespace qv
