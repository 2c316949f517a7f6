#include <qv/products.hpp>

#include <tuple>

#include <qv/errors.hpp>
#include <qv/memo.hpp>

namespace qv {

namespace {

struct product_key {
    monomial a;
    rational m;
    rational order;

    friend bool operator<(const product_key &x, const product_key &y)
    {
        if (x.m != y.m) {
            return x.m < y.m;
        }
        if (x.order != y.order) {
            return x.order < y.order;
        }
        return x.a < y.a;
    }
};

memo_table<product_key, series> &poch_cache()
{
    static memo_table<product_key, series> table;
    return table;
}

memo_table<product_key, series> &theta_cache()
{
    static memo_table<product_key, series> table;
    return table;
}

void check_modulus(const rational &m)
{
    if (m <= 0) {
        throw std::invalid_argument("modulus must be positive");
    }
}

// s * (1 - mu), keeping s's truncation.
series times_one_minus(const series &s, const monomial &mu)
{
    std::int64_t d = lcm_den(s.den(), mu.q_exp());
    series ls = s.lifted(d);
    return ls - ls.times_monomial(mu.scalar(), to_units(mu.q_exp(), d), mu.syms());
}

} // namespace

series poch_finite(const monomial &a, const rational &m, std::int64_t n)
{
    check_modulus(m);
    series s = series::constant(1);
    for (std::int64_t k = 0; k < n; ++k) {
        s = times_one_minus(s, a * monomial::q(m * rational(static_cast<long>(k))));
    }
    return s;
}

series poch_finite(const monomial &a, const rational &m, std::int64_t n, const rational &order)
{
    check_modulus(m);
    series s = series::constant(1).truncated(order);
    for (std::int64_t k = 0; k < n; ++k) {
        s = times_one_minus(s, a * monomial::q(m * rational(static_cast<long>(k))));
    }
    return s;
}

series poch_infinite(const monomial &a, const rational &m, const rational &order)
{
    check_modulus(m);
    if (a.q_exp() < 0) {
        throw divergent_product("(" + a.to_string() + "; q^" + to_string(m)
                                + ")_inf has a factor of negative q-valuation");
    }
    product_key key{a, m, order};
    return poch_cache().get_or_compute(key, [&] {
        series s = series::constant(1).truncated(order);
        for (std::int64_t k = 0;; ++k) {
            monomial mu = a * monomial::q(m * rational(static_cast<long>(k)));
            if (mu.q_exp() >= order) {
                break;
            }
            s = times_one_minus(s, mu);
            if (s.is_zero()) {
                break;
            }
        }
        return s;
    });
}

series j_theta(const monomial &x, const rational &m, const rational &order)
{
    check_modulus(m);
    product_key key{x, m, order};
    return theta_cache().get_or_compute(key, [&] {
        integer nz = floor(x.q_exp() / m);
        std::int64_t n = to_int64(nz);
        monomial x0 = x / monomial::q(m * rational(static_cast<long>(n)));
        // j(q^{nm} x0) = (-1)^n q^{-m C(n,2)} x0^{-n} j(x0)
        monomial pre = monomial(n % 2 == 0 ? 1 : -1, -m * rational(static_cast<long>(choose2(n))))
                       * x0.pow(-n);
        rational inner = order - pre.q_exp();
        series base = poch_infinite(monomial::q(m), m, inner);
        series jx = base * poch_infinite(x0, m, inner) * poch_infinite(monomial::q(m) / x0, m, inner);
        return (pre.to_series() * jx).truncated(order);
    });
}

series J(const rational &a, const rational &m, const rational &order)
{
    return j_theta(monomial::q(a), m, order);
}

series Jbar(const rational &a, const rational &m, const rational &order)
{
    return j_theta(-monomial::q(a), m, order);
}

series J(const rational &m, const rational &order)
{
    return J(m, 3 * m, order);
}

void clear_product_caches()
{
    poch_cache().clear();
    theta_cache().clear();
}

} // namespace qv
