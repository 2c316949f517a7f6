#pragma once

#include <cstdint>
#include <string>

#include <qv/coefficient.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// c * q^e * prod sym_i^k_i with c != 0: the argument type of every special function.
class monomial {
public:
    monomial() : scalar_(1) {}
    explicit monomial(const rational &scalar, const rational &q_exp = 0, const sym_exps &syms = {});

    // q^e
    static monomial q(const rational &e = 1);

    const rational &scalar() const noexcept
    {
        return scalar_;
    }

    const rational &q_exp() const noexcept
    {
        return q_exp_;
    }

    const sym_exps &syms() const noexcept
    {
        return syms_;
    }

    bool has_symbols() const noexcept
    {
        return !syms_.is_zero();
    }

    // True for the scalar 1 with no q-power and no symbols.
    bool is_one() const;

    monomial inverse() const;
    monomial pow(std::int64_t k) const;

    friend monomial operator*(const monomial &a, const monomial &b);
    friend monomial operator/(const monomial &a, const monomial &b)
    {
        return a * b.inverse();
    }
    friend monomial operator-(const monomial &a)
    {
        return monomial(-a.scalar_, a.q_exp_, a.syms_);
    }

    friend bool operator==(const monomial &a, const monomial &b);
    friend bool operator<(const monomial &a, const monomial &b);

    series to_series() const;

    // Coefficient part c * syms.
    coefficient coeff() const
    {
        return coefficient::monomial(scalar_, syms_);
    }

    std::string to_string(const symbol_context &ctx = symbol_context::standard()) const;

private:
    rational scalar_;
    rational q_exp_;
    sym_exps syms_;
};

// Reads a single-term exact series as a monomial; throws error otherwise.
monomial as_monomial(const series &s);

} // namespace qv
