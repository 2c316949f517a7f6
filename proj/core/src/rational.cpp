#include <qv/rational.hpp>

#include <limits>
#include <numeric>
#include <stdexcept>

namespace qv {

rational make_rational(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    rational r(num, den);
    r.canonicalize();
    return r;
}

rational parse_rational(std::string_view text)
{
    std::string s(text);
    rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
    r.canonicalize();
    return r;
}

std::string to_string(const rational &r)
{
    return r.get_str(10);
}

integer floor(const rational &r)
{
    integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

integer ceil(const rational &r)
{
    integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

bool is_integer(const rational &r)
{
    return r.get_den() == 1;
}

std::int64_t to_int64(const integer &z)
{
    if (!z.fits_slong_p()) {
        throw std::overflow_error("integer does not fit in 64 bits");
    }
    return z.get_si();
}

std::int64_t to_units(const rational &e, std::int64_t den)
{
    rational scaled = e * rational(static_cast<long>(den));
    if (!is_integer(scaled)) {
        throw std::invalid_argument("exponent " + to_string(e) + " is not a multiple of 1/"
                                    + std::to_string(den));
    }
    return to_int64(scaled.get_num());
}

std::int64_t lcm_den(std::int64_t den, const rational &r)
{
    std::int64_t d = to_int64(r.get_den());
    return std::lcm(den, d);
}

} // namespace qv
