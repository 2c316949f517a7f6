#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qv/coefficient.hpp>
#include <qv/rational.hpp>

namespace qv {

// Sparse truncated series in q^(1/D) with Laurent-polynomial coefficients.
//
// Exponents are stored as integers in units of 1/D. The truncation order T
// (also in units) means every coefficient of q^(e/D) with e < T is exact; an
// exact series (a Laurent polynomial in q) has T = exact_units.
class series {
public:
    using term = std::pair<std::int64_t, coefficient>;

    static constexpr std::int64_t exact_units = std::numeric_limits<std::int64_t>::max();

    // Exact zero.
    series() = default;

    // Builds from raw terms; zero coefficients and terms at or past the truncation are dropped.
    series(std::int64_t den, std::int64_t trunc_units, std::vector<term> terms);

    static series constant(const coefficient &c);
    static series zero(const rational &order);
    static series q_power(const rational &e, const coefficient &c = coefficient(1));

    std::int64_t den() const noexcept
    {
        return den_;
    }

    std::int64_t trunc_units() const noexcept
    {
        return trunc_;
    }

    bool is_exact() const noexcept
    {
        return trunc_ == exact_units;
    }

    // Truncation order as a rational; nullopt for exact series.
    std::optional<rational> trunc() const;

    const std::vector<term> &terms() const noexcept
    {
        return terms_;
    }

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    // Least exponent with a nonzero coefficient; nullopt for the zero series.
    std::optional<rational> val() const;

    // Throws order_beyond_truncation when e is not below the truncation order.
    coefficient coeff(const rational &e) const;

    // Lowers the truncation order to min(trunc, order).
    series truncated(const rational &order) const;

    // Same series over exponent denominator den (a multiple of the current one).
    series lifted(std::int64_t den) const;

    series operator-() const;
    series &operator+=(const series &o);
    series &operator-=(const series &o);
    series &operator*=(const series &o);

    friend series operator+(series a, const series &b)
    {
        a += b;
        return a;
    }

    friend series operator-(series a, const series &b)
    {
        a -= b;
        return a;
    }

    friend series operator*(const series &a, const series &b);

    series scaled(const rational &c) const;

    // Multiplies by c * q^(e) * sym^exps with e given in units of den().
    series times_monomial(const rational &c, std::int64_t q_units, const sym_exps &e) const;

    bool is_integral() const;

    std::string to_string(const symbol_context &ctx = symbol_context::standard()) const;

private:
    void normalize_den();
    void drop_beyond_trunc();

    std::int64_t den_ = 1;
    std::int64_t trunc_ = exact_units;
    // Sorted by exponent, no zero coefficients, every exponent < trunc_.
    std::vector<term> terms_;
};

// Multiplicative inverse. The lowest coefficient must be a single monomial.
// An exact non-monomial input needs `order` to bound the result.
series invert(const series &s, const std::optional<rational> &order = std::nullopt);

// q -> sign * q^k applied termwise.
series substitute(const series &s, int sign, std::int64_t k);

struct mismatch {
    rational exponent;
    coefficient lhs;
    coefficient rhs;
};

struct equality_report {
    bool equal = true;
    std::optional<mismatch> first_mismatch;
};

// Compares all coefficients of exponents below `order`.
equality_report eq_up_to(const series &a, const series &b, const rational &order);

} // namespace qv
