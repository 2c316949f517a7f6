#include <qv/appell_lerch.hpp>

#include <qv/errors.hpp>
#include <qv/precision.hpp>
#include <qv/products.hpp>

namespace qv {

namespace {

monomial sign_power(std::int64_t n)
{
    return monomial(n % 2 == 0 ? 1 : -1);
}

// 1/s, mapping a vanishing or non-unit theta value to non_generic_parameters.
series theta_inverse(const series &s, const rational &order, const char *what)
{
    try {
        return invert(s, order);
    } catch (const not_invertible &) {
        throw non_generic_parameters(std::string(what) + " vanishes or is not invertible");
    }
}

} // namespace

series appell_unnormalized(std::int64_t level, const monomial &a, const monomial &b, const rational &order,
                           const bilateral_options &opts)
{
    if (level <= 0) {
        throw std::invalid_argument("Appell level must be positive");
    }
    bilateral_term_stream stream{[=](std::int64_t n) {
        monomial pre = sign_power(level * n)
                       * monomial::q(rational(static_cast<long>(level * n * (n + 1)), 2)) * b.pow(n);
        return bilateral_term{pre, a * monomial::q(rational(static_cast<long>(n)))};
    }};
    return sum_bilateral(stream, order, opts);
}

series m_numerator(const monomial &x, const rational &m, const monomial &z, const rational &order,
                   const bilateral_options &opts)
{
    monomial xz = x * z;
    bilateral_term_stream stream{[=](std::int64_t r) {
        monomial pre = sign_power(r) * monomial::q(m * rational(static_cast<long>(choose2(r)))) * z.pow(r);
        monomial pole = monomial::q(m * rational(static_cast<long>(r - 1))) * xz;
        return bilateral_term{pre, pole};
    }};
    return sum_bilateral(stream, order, opts);
}

series m_sum(const monomial &x, const rational &m, const monomial &z, const rational &order)
{
    if (m <= 0) {
        throw std::invalid_argument("modulus must be positive");
    }
    return at_order(order, [&](const rational &n) {
        series jz = j_theta(z, m, n);
        if (jz.is_zero()) {
            throw non_generic_parameters("j(" + z.to_string() + ", q^" + to_string(m) + ") = 0");
        }
        return m_numerator(x, m, z, n) * theta_inverse(jz, n, "j(z, q^m)");
    });
}

series delta_correction(const monomial &x, const rational &m, const monomial &z1, const monomial &z0,
                        const rational &order)
{
    return at_order(order, [&](const rational &n) {
        series num = z0.to_series() * J(m, n) * J(m, n) * J(m, n) * j_theta(z1 / z0, m, n)
                     * j_theta(x * z0 * z1, m, n);
        if (num.is_zero()) {
            return num;
        }
        series den = j_theta(z0, m, n) * j_theta(z1, m, n) * j_theta(x * z0, m, n) * j_theta(x * z1, m, n);
        if (den.is_zero()) {
            throw non_generic_parameters("a theta function in the denominator of Delta vanishes");
        }
        return num * theta_inverse(den, n, "denominator of Delta");
    });
}

} // namespace qv
