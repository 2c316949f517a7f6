#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qv {

// Exact rational, always canonical (lowest terms, positive denominator).
using rational = mpq_class;
using integer = mpz_class;

rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q".
rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const rational &r);

integer floor(const rational &r);
integer ceil(const rational &r);

bool is_integer(const rational &r);

std::int64_t to_int64(const integer &z);

// e * den as int64; throws std::invalid_argument when e * den is not integral.
std::int64_t to_units(const rational &e, std::int64_t den);

std::int64_t lcm_den(std::int64_t den, const rational &r);

// Binomial coefficient C(a, 2) = a (a - 1) / 2, valid for rational a.
inline rational choose2(const rational &a)
{
    rational r = a * (a - 1) / 2;
    return r;
}

inline std::int64_t choose2(std::int64_t a)
{
    return a * (a - 1) / 2;
}

} // namespace qv
