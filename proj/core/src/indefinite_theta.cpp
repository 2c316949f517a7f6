#include <qv/indefinite_theta.hpp>

#include <numeric>

#include <qv/accumulator.hpp>
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

// Q(u, v) = A u^2 + B u v + C v^2 + D u + E v + F on the quadrant u, v >= 0.
struct quadrant_quadratic {
    rational A, B, C, D, E, F;

    // Lower bound of Q on the diagonal u + v = t: k t^2 + min(D, E) t + F, where
    // k is the minimum of A l^2 + B l (1 - l) + C (1 - l)^2 over l in [0, 1].
    rational curvature() const
    {
        rational k = A < C ? A : C;
        rational denom = A + C - B;
        if (denom > 0) {
            rational l = (2 * C - B) / (2 * denom);
            if (l > 0 && l < 1) {
                rational interior = (4 * A * C - B * B) / (4 * denom);
                if (interior < k) {
                    k = interior;
                }
            }
        }
        return k;
    }

    rational diagonal_bound(std::int64_t t, const rational &k) const
    {
        rational tt(static_cast<long>(t));
        return k * tt * tt + (D < E ? D : E) * tt + F;
    }
};

// Adds sign * sum over one quadrant of (-1)^{r+s} x^r y^s q^{base E(r,s)} below order.
template <typename Point>
void sum_quadrant(series_accumulator &acc, const quadrant_quadratic &qq, const rational &order, Point &&point)
{
    rational k = qq.curvature();
    rational lin = qq.D < qq.E ? qq.D : qq.E;
    if (k < 0 || (k == 0 && lin <= 0)) {
        throw divergent_sum("indefinite theta series: diagonal valuation bound does not grow");
    }
    for (std::int64_t t = 0;; ++t) {
        rational bound = qq.diagonal_bound(t, k);
        if (bound >= order && qq.diagonal_bound(t + 1, k) >= bound) {
            return;
        }
        for (std::int64_t u = 0; u <= t; ++u) {
            monomial m = point(u, t - u);
            if (m.q_exp() < order) {
                acc.add(m);
            }
        }
    }
}

} // namespace

series f_indef(const quad_form &form, const monomial &x, const monomial &y, const rational &order,
               const rational &base)
{
    if (base <= 0) {
        throw std::invalid_argument("base must be positive");
    }
    const rational a(static_cast<long>(form.a));
    const rational b(static_cast<long>(form.b));
    const rational c(static_cast<long>(form.c));
    const rational &ex = x.q_exp();
    const rational &ey = y.q_exp();

    auto summand = [&](std::int64_t r, std::int64_t s) {
        return sign_power(r + s) * x.pow(r) * y.pow(s) * monomial::q(base * form.exponent(r, s));
    };

    series_accumulator acc;
    quadrant_quadratic pos{base * a / 2, base * b, base * c / 2, -base * a / 2 + ex, -base * c / 2 + ey, 0};
    sum_quadrant(acc, pos, order, [&](std::int64_t u, std::int64_t v) { return summand(u, v); });

    // r = -1 - u, s = -1 - v
    quadrant_quadratic neg{base * a / 2,
                           base * b,
                           base * c / 2,
                           base * (3 * a / 2 + b) - ex,
                           base * (3 * c / 2 + b) - ey,
                           base * (a + b + c) - ex - ey};
    sum_quadrant(acc, neg, order, [&](std::int64_t u, std::int64_t v) { return -summand(-1 - u, -1 - v); });
    return acc.build(order);
}

series g_hm(const quad_form &form, const monomial &x, const monomial &y, const monomial &z1, const monomial &z0,
            const rational &order)
{
    const std::int64_t a = form.a;
    const std::int64_t b = form.b;
    const std::int64_t c = form.c;
    const std::int64_t disc = b * b - a * c;
    if (disc <= 0 || a <= 0 || c <= 0) {
        throw std::invalid_argument("g_{a,b,c} needs a, c > 0 and b^2 > a c");
    }
    auto qr = [](std::int64_t e) { return monomial::q(rational(static_cast<long>(e))); };
    monomial mx = -x;
    monomial my = -y;

    return at_order(order, [&](const rational &n) {
        series total = series::zero(n);
        for (std::int64_t t = 0; t < a; ++t) {
            monomial pre = my.pow(t) * qr(c * choose2(t));
            monomial arg = -qr(a * choose2(b + 1) - c * choose2(a + 1) - t * disc) * my.pow(a) / mx.pow(b);
            total += pre.to_series() * j_theta(qr(b * t) * x, rational(static_cast<long>(a)), n)
                     * m_sum(arg, rational(static_cast<long>(a * disc)), z0, n);
        }
        for (std::int64_t t = 0; t < c; ++t) {
            monomial pre = mx.pow(t) * qr(a * choose2(t));
            monomial arg = -qr(c * choose2(b + 1) - a * choose2(c + 1) - t * disc) * mx.pow(c) / my.pow(b);
            total += pre.to_series() * j_theta(qr(b * t) * y, rational(static_cast<long>(c)), n)
                     * m_sum(arg, rational(static_cast<long>(c * disc)), z1, n);
        }
        return total;
    });
}

series theta_hm(std::int64_t n, std::int64_t p, const monomial &x, const monomial &y, const rational &order)
{
    if (n <= 0 || p <= 0 || std::gcd(n, p) != 1) {
        throw std::invalid_argument("theta_{n,p} needs coprime positive n, p");
    }
    const rational rn(static_cast<long>(n));
    const rational rp(static_cast<long>(p));
    const rational half_nm1 = (rn - 1) / 2;
    const rational half_np1 = (rn + 1) / 2;
    const rational frac = half_nm1 - rational(floor(half_nm1));
    const rational wide = rp * rp * (2 * rn + rp);     // p^2 (2n + p)
    const rational mid = rn * rp * (2 * rn + rp);      // n p (2n + p)
    const rational narrow = rn * rp * rp;              // n p^2
    monomial mx = -x;
    monomial my = -y;

    auto int_exp = [](const rational &e) {
        if (!is_integer(e)) {
            throw std::logic_error("theta_{n,p}: non-integral exponent of x or y");
        }
        return to_int64(e.get_num());
    };

    return at_order(order, [&](const rational &N) {
        series inv_bar;
        try {
            inv_bar = invert(Jbar(0, mid, N), N);
        } catch (const not_invertible &) {
            throw non_generic_parameters("Jbar_{0,np(2n+p)} is not invertible");
        }
        series cube = J(wide, N);
        cube = cube * cube * cube;
        series total = series::zero(N);
        for (std::int64_t rs = 0; rs < p; ++rs) {
            for (std::int64_t ss = 0; ss < p; ++ss) {
                rational r = rational(static_cast<long>(rs)) + frac;
                rational s = rational(static_cast<long>(ss)) + frac;
                rational u = r - half_nm1;
                rational v = s + half_np1;
                rational qe = rn * choose2(u) + (rn + rp) * u * v + rn * choose2(v);
                monomial pre = monomial::q(qe) * mx.pow(int_exp(u)) * my.pow(int_exp(v));

                series num = cube
                             * j_theta(-monomial::q(rn * rp * (s - r)) * x.pow(n) / y.pow(n), narrow, N)
                             * j_theta(monomial::q(rp * (2 * rn + rp) * (r + s) + rp * (rn + rp)) * x.pow(p)
                                           * y.pow(p),
                                       wide, N);
                if (num.is_zero()) {
                    continue;
                }
                series den = j_theta(monomial::q(rp * (2 * rn + rp) * r + rp * (rn + rp) / 2) * my.pow(n + p)
                                         / mx.pow(n),
                                     wide, N)
                             * j_theta(monomial::q(rp * (2 * rn + rp) * s + rp * (rn + rp) / 2) * mx.pow(n + p)
                                           / my.pow(n),
                                       wide, N);
                series inv_den;
                try {
                    inv_den = invert(den, N);
                } catch (const not_invertible &) {
                    throw non_generic_parameters("theta quotient denominator vanishes");
                }
                total += pre.to_series() * num * inv_den;
            }
        }
        return total * inv_bar;
    });
}

series hm_residual(std::int64_t n, std::int64_t p, const monomial &x, const monomial &y, const rational &order)
{
    quad_form form{n, n + p, n};
    return at_order(order, [&](const rational &N) {
        return f_indef(form, x, y, N) - g_hm(form, x, y, monomial(-1), monomial(-1), N) - theta_hm(n, p, x, y, N);
    });
}

equality_report hm_check(std::int64_t n, std::int64_t p, const monomial &x, const monomial &y, const rational &order)
{
    quad_form form{n, n + p, n};
    series lhs = f_indef(form, x, y, order);
    series rhs = at_order(order, [&](const rational &N) {
        return g_hm(form, x, y, monomial(-1), monomial(-1), N) + theta_hm(n, p, x, y, N);
    });
    return eq_up_to(lhs, rhs, order);
}

} // namespace qv
