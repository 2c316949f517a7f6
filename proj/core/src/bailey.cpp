#include <qv/bailey.hpp>

#include <memory>

#include <qv/errors.hpp>
#include <qv/memo.hpp>
#include <qv/precision.hpp>
#include <qv/products.hpp>
#include <qv/summation.hpp>

namespace qv {

std::string rho_spec::to_string() const
{
    return is_infinite() ? "inf" : value_->to_string();
}

namespace {

constexpr std::int64_t kMaxTerms = 1000000;

using seq_key = std::pair<std::int64_t, rational>;

// Caches a sequence by (n, order); chained pairs re-read earlier terms many times.
pair_sequence memoized(pair_sequence f)
{
    auto table = std::make_shared<memo_table<seq_key, series>>();
    return [f = std::move(f), table](std::int64_t n, const rational &order) {
        return table->get_or_compute(seq_key{n, order}, [&] { return f(n, order); });
    };
}

monomial sign_power(std::int64_t n)
{
    return monomial(n % 2 == 0 ? 1 : -1);
}

rational as_rat(std::int64_t v)
{
    return rational(static_cast<long>(v));
}

// q^(base * e)
monomial qb(const rational &base, const rational &e)
{
    return monomial::q(base * e);
}

series inverse_of(const series &s, const rational &order)
{
    return invert(s, order);
}

// (rho1)_n (rho2)_n (aq / rho1 rho2)^n with the rho -> infinity limits applied.
series weight(const bailey_pair &p, const rho_spec &r1, const rho_spec &r2, std::int64_t n, const rational &order)
{
    const rational &M = p.base;
    monomial pre = (p.relative * monomial::q(M)).pow(n);
    for (const rho_spec *r : {&r1, &r2}) {
        pre = pre * (r->is_infinite() ? sign_power(n) * qb(M, as_rat(choose2(n))) : r->value().pow(-n));
    }
    series w = pre.to_series();
    for (const rho_spec *r : {&r1, &r2}) {
        if (!r->is_infinite()) {
            w = w * poch_finite(r->value(), M, n, order - pre.q_exp());
        }
    }
    return w.truncated(order);
}

rational weight_floor(const bailey_pair &p, const rho_spec &r1, const rho_spec &r2, std::int64_t n)
{
    const rational &M = p.base;
    rational v = as_rat(n) * (p.relative.q_exp() + M);
    for (const rho_spec *r : {&r1, &r2}) {
        if (r->is_infinite()) {
            v += M * as_rat(choose2(n));
        } else {
            v -= as_rat(n) * r->value().q_exp();
        }
    }
    return v;
}

// (aq/rho)_n, or 1 for rho = infinity.
series aq_over_rho_poch(const bailey_pair &p, const rho_spec &r, std::int64_t n, const rational &order)
{
    if (r.is_infinite()) {
        return series::constant(1);
    }
    return poch_finite(p.relative * monomial::q(p.base) / r.value(), p.base, n, order);
}

// (aq/rho1 rho2)_n, or 1 when either rho is infinite.
series aq_over_rho12_poch(const bailey_pair &p, const rho_spec &r1, const rho_spec &r2, std::int64_t n,
                          const rational &order)
{
    if (r1.is_infinite() || r2.is_infinite()) {
        return series::constant(1);
    }
    return poch_finite(p.relative * monomial::q(p.base) / (r1.value() * r2.value()), p.base, n, order);
}

void check_rhos(const bailey_pair &p, const rho_spec &r1, const rho_spec &r2)
{
    monomial aq = p.relative * monomial::q(p.base);
    for (const rho_spec *r : {&r1, &r2}) {
        if (r->is_infinite()) {
            continue;
        }
        if (r->value().q_exp() < 0 || (aq / r->value()).q_exp() < 0) {
            throw std::invalid_argument("finite rho must keep rho and aq/rho at nonnegative q-valuation");
        }
    }
    if (!r1.is_infinite() && !r2.is_infinite() && (aq / (r1.value() * r2.value())).q_exp() < 0) {
        throw std::invalid_argument("aq/(rho1 rho2) has negative q-valuation");
    }
}

} // namespace

pair_check verify_pair(const bailey_pair &p, std::int64_t n_max, const rational &order)
{
    pair_check out;
    const rational &M = p.base;
    monomial aq = p.relative * monomial::q(M);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        series rhs = series::zero(order);
        for (std::int64_t k = 0; k <= n; ++k) {
            series den = poch_finite(monomial::q(M), M, n - k, order) * poch_finite(aq, M, n + k, order);
            rhs += p.alpha(k, order) * inverse_of(den, order);
        }
        equality_report rep = eq_up_to(p.beta(n, order), rhs, order);
        if (!rep.equal) {
            out.ok = false;
            out.first_failure = n;
            out.detail = rep.first_mismatch;
            return out;
        }
    }
    return out;
}

bailey_pair chain_step(const bailey_pair &p, const rho_spec &rho1, const rho_spec &rho2)
{
    check_rhos(p, rho1, rho2);
    bailey_pair out;
    out.name = p.name + "'";
    out.relative = p.relative;
    out.base = p.base;
    out.alpha = memoized([p, rho1, rho2](std::int64_t n, const rational &order) {
        return at_order(order, [&](const rational &N) {
            series den = aq_over_rho_poch(p, rho1, n, N) * aq_over_rho_poch(p, rho2, n, N);
            return weight(p, rho1, rho2, n, N) * p.alpha(n, N) * invert(den, N);
        });
    });
    out.beta = memoized([p, rho1, rho2](std::int64_t n, const rational &order) {
        return at_order(order, [&](const rational &N) {
            series den = aq_over_rho_poch(p, rho1, n, N) * aq_over_rho_poch(p, rho2, n, N);
            series total = series::zero(N);
            for (std::int64_t k = 0; k <= n; ++k) {
                series inner = weight(p, rho1, rho2, k, N) * aq_over_rho12_poch(p, rho1, rho2, n - k, N)
                               * invert(poch_finite(monomial::q(p.base), p.base, n - k, N), N);
                total += inner * p.beta(k, N);
            }
            return total * invert(den, N);
        });
    });
    auto floor = p.alpha_floor;
    out.alpha_floor = [p, rho1, rho2, floor](std::int64_t n) -> rational { return weight_floor(p, rho1, rho2, n) + floor(n); };
    return out;
}

std::pair<series, series> limit_identity(const bailey_pair &p, const rho_spec &rho1, const rho_spec &rho2,
                                         const rational &order)
{
    check_rhos(p, rho1, rho2);
    const rational &M = p.base;
    monomial aq = p.relative * monomial::q(M);
    if (!rho1.is_infinite() && !rho2.is_infinite() && (aq / (rho1.value() * rho2.value())).q_exp() <= 0) {
        throw divergent_sum("aq/(rho1 rho2) must have positive q-valuation");
    }

    series lhs = at_order(order, [&](const rational &N) {
        return sum_while_below(
            N, [&](std::int64_t n) { return weight(p, rho1, rho2, n, N) * p.beta(n, N); },
            [&](std::int64_t n) -> rational { return weight_floor(p, rho1, rho2, n); });
    });

    series rhs = at_order(order, [&](const rational &N) {
        series sum = sum_while_below(
            N,
            [&](std::int64_t n) {
                series den = aq_over_rho_poch(p, rho1, n, N) * aq_over_rho_poch(p, rho2, n, N);
                return weight(p, rho1, rho2, n, N) * p.alpha(n, N) * invert(den, N);
            },
            [&](std::int64_t n) -> rational { return weight_floor(p, rho1, rho2, n) + p.alpha_floor(n); });
        series num = series::constant(1);
        series den = poch_infinite(aq, M, N);
        for (const rho_spec *r : {&rho1, &rho2}) {
            if (!r->is_infinite()) {
                num = num * poch_infinite(aq / r->value(), M, N);
            }
        }
        if (!rho1.is_infinite() && !rho2.is_infinite()) {
            den = den * poch_infinite(aq / (rho1.value() * rho2.value()), M, N);
        }
        return num * invert(den, N) * sum;
    });
    return {lhs, rhs};
}

namespace {

// sum_{r,n>=0} (-a)^n q^{base (c2 n(n+1)/2 + (2n+1) r)} alpha_r
series residual_double_sum(const bailey_pair &p, std::int64_t c2, const rational &N)
{
    const rational &M = p.base;
    monomial minus_a = -p.relative;
    series total = series::zero(N);
    auto exponent = [&](std::int64_t n, std::int64_t r) -> rational {
        return M * (as_rat(c2 * n * (n + 1)) / 2 + as_rat((2 * n + 1) * r)) + as_rat(n) * minus_a.q_exp();
    };
    for (std::int64_t r = 0;; ++r) {
        rational fr = exponent(0, r) + p.alpha_floor(r);
        rational fr_next = exponent(0, r + 1) + p.alpha_floor(r + 1);
        if (fr >= N && fr_next >= fr) {
            break;
        }
        if (r > kMaxTerms) {
            throw divergent_sum("residual sum over r did not terminate");
        }
        series ar = p.alpha(r, N);
        if (ar.is_zero()) {
            continue;
        }
        for (std::int64_t n = 0;; ++n) {
            rational f = exponent(n, r) + p.alpha_floor(r);
            if (f >= N && exponent(n + 1, r) >= exponent(n, r)) {
                break;
            }
            monomial m = minus_a.pow(n) * monomial::q(M * (as_rat(c2 * n * (n + 1)) / 2 + as_rat((2 * n + 1) * r)));
            total += m.to_series() * ar;
        }
    }
    return total;
}

} // namespace

std::pair<series, series> partial_theta_fine(const bailey_pair &p, const rational &order)
{
    const rational &M = p.base;
    monomial aq = p.relative * monomial::q(M);
    if (p.relative.q_exp() < 0) {
        throw std::invalid_argument("relative parameter must have nonnegative q-valuation");
    }
    series lhs = at_order(order, [&](const rational &N) {
        return sum_while_below(
            N,
            [&](std::int64_t n) {
                return poch_finite(aq, M, 2 * n, N) * qb(M, as_rat(n)).to_series() * p.beta(n, N);
            },
            [&](std::int64_t n) -> rational { return M * as_rat(n); });
    });
    series rhs = at_order(order, [&](const rational &N) {
        return invert(poch_infinite(monomial::q(M), M, N), N) * residual_double_sum(p, 3, N);
    });
    return {lhs, rhs};
}

std::pair<series, series> partial_theta_basic(const bailey_pair &p, const rational &order)
{
    const rational &M = p.base;
    monomial aq = p.relative * monomial::q(M);
    if (p.relative.q_exp() < 0) {
        throw std::invalid_argument("relative parameter must have nonnegative q-valuation");
    }
    series lhs = at_order(order, [&](const rational &N) {
        return sum_while_below(
            N, [&](std::int64_t n) { return qb(M, as_rat(n)).to_series() * p.beta(n, N); },
            [&](std::int64_t n) -> rational { return M * as_rat(n); });
    });
    series rhs = at_order(order, [&](const rational &N) {
        series den = poch_infinite(monomial::q(M), M, N) * poch_infinite(aq, M, N);
        return invert(den, N) * residual_double_sum(p, 1, N);
    });
    return {lhs, rhs};
}

namespace {

// (1 - q^{base (2n+1)}) / (1 - q^base) = sum_{i=0}^{2n} q^{base i}
series odd_block(const rational &M, std::int64_t n)
{
    series s;
    for (std::int64_t i = 0; i <= 2 * n; ++i) {
        s += qb(M, as_rat(i)).to_series();
    }
    return s;
}

bailey_pair fifth_order(const rational &M)
{
    bailey_pair p;
    p.name = "fifth_order";
    p.relative = monomial::q(M);
    p.base = M;
    p.alpha = memoized([M](std::int64_t n, const rational &order) {
        series inner;
        for (std::int64_t j = -n; j <= n; ++j) {
            inner += (sign_power(j) * qb(M, as_rat(-j * j))).to_series();
        }
        monomial pre = qb(M, as_rat(n * (3 * n + 1)) / 2);
        return (pre.to_series() * odd_block(M, n) * inner).truncated(order);
    });
    p.beta = memoized([M](std::int64_t n, const rational &order) {
        return invert(poch_finite(-monomial::q(M), M, n, order), order);
    });
    p.alpha_floor = [M](std::int64_t n) -> rational { return M * as_rat(n * (n + 1)) / 2; };
    return p;
}

bailey_pair early_conditions(const rational &M)
{
    bailey_pair p;
    p.name = "early_conditions";
    p.relative = monomial::q(M);
    p.base = M;
    p.alpha = memoized([M](std::int64_t n, const rational &order) {
        series inner;
        for (std::int64_t j = -n; j <= n; ++j) {
            if (2 * (j < 0 ? -j : j) > n) {
                continue;
            }
            inner += (sign_power(j) * qb(M, as_rat(-j * (3 * j + 1)))).to_series();
        }
        monomial pre = qb(M, as_rat(n * n));
        return (pre.to_series() * odd_block(M, n) * inner).truncated(order);
    });
    p.beta = memoized([M](std::int64_t n, const rational &order) {
        series den = poch_finite(monomial::q(M), M, n, order) * poch_finite(monomial::q(M), 2 * M, n, order);
        return qb(M, as_rat(choose2(n))).to_series() * invert(den, order);
    });
    // n^2 - max_{|2j|<=n} j(3j+1) >= n^2/4 - n/2
    p.alpha_floor = [M](std::int64_t n) -> rational { return M * (as_rat(n * n) / 4 - as_rat(n) / 2); };
    return p;
}

bailey_pair unit_z(const rational &M)
{
    bailey_pair p;
    p.name = "unit_z";
    p.relative = monomial(1);
    p.base = M;
    const sym_exps z_unit = symbol_context::standard().unit("z");
    monomial z(1, 0, z_unit);
    p.alpha = memoized([M, z](std::int64_t n, const rational &order) {
        if (n == 0) {
            return series::constant(1).truncated(order);
        }
        series s = (z.pow(n) * qb(M, as_rat(choose2(n)))).to_series()
                   + (z.pow(-n) * qb(M, as_rat(choose2(n + 1)))).to_series();
        return s.scaled(n % 2 == 0 ? 1 : -1).truncated(order);
    });
    p.beta = memoized([M, z](std::int64_t n, const rational &order) {
        series num = poch_finite(z, M, n, order) * poch_finite(monomial::q(M) / z, M, n, order);
        return num * invert(poch_finite(monomial::q(M), M, 2 * n, order), order);
    });
    p.alpha_floor = [M](std::int64_t n) -> rational { return M * as_rat(choose2(n)); };
    return p;
}

bailey_pair slater_l6(const rational &M)
{
    bailey_pair p;
    p.name = "slater_L6";
    p.relative = monomial(1);
    p.base = M;
    p.alpha = memoized([M](std::int64_t n, const rational &order) {
        if (n % 2 != 0) {
            return series::zero(order);
        }
        if (n == 0) {
            return series::constant(1).truncated(order);
        }
        std::int64_t r = n / 2;
        series s = qb(M, as_rat(3 * r * r - r)).to_series() + qb(M, as_rat(3 * r * r + r)).to_series();
        return s.scaled(r % 2 == 0 ? 1 : -1).truncated(order);
    });
    p.beta = memoized([M](std::int64_t n, const rational &order) {
        series den = poch_finite(monomial::q(M), 2 * M, n, order) * poch_finite(monomial::q(M), M, n, order);
        return invert(den, order);
    });
    p.alpha_floor = [M](std::int64_t n) -> rational { return M * (as_rat(3 * n * n) / 4 - as_rat(n) / 2); };
    return p;
}

} // namespace

bailey_pair builtin_pair(const std::string &name, const rational &base)
{
    if (base <= 0) {
        throw std::invalid_argument("base must be positive");
    }
    if (name == "fifth_order") {
        return fifth_order(base);
    }
    if (name == "early_conditions") {
        return early_conditions(base);
    }
    if (name == "unit_z") {
        return unit_z(base);
    }
    if (name == "slater_L6") {
        return slater_l6(base);
    }
    throw unknown_pair("unknown Bailey pair '" + name + "'");
}

std::vector<std::string> builtin_pair_names()
{
    return {"fifth_order", "early_conditions", "unit_z", "slater_L6"};
}

} // namespace qv
