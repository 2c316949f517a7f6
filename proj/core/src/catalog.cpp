#include <qv/catalog.hpp>

#include <algorithm>
#include <map>

#include <qv/accumulator.hpp>
#include <qv/errors.hpp>
#include <qv/precision.hpp>
#include <qv/products.hpp>
#include <qv/summation.hpp>

namespace qv {

namespace {

rational rat(std::int64_t v)
{
    return rational(static_cast<long>(v));
}

monomial Q(const rational &e)
{
    return monomial::q(e);
}

monomial Q(std::int64_t e)
{
    return monomial::q(rat(e));
}

monomial sgn(std::int64_t n)
{
    return monomial(n % 2 == 0 ? 1 : -1);
}

// (a; q^m)_len
struct poch_factor {
    monomial a;
    rational m;
    std::int64_t len;
};

// mono * prod num / prod den
struct hyper_term {
    monomial mono;
    std::vector<poch_factor> num;
    std::vector<poch_factor> den;
};

// Exact valuation of (a; q^m)_len when no factor vanishes; a lower bound otherwise.
rational poch_floor(const poch_factor &p)
{
    rational v = 0;
    for (std::int64_t k = 0; k < p.len; ++k) {
        rational e = p.a.q_exp() + rat(k) * p.m;
        if (e < 0) {
            v += e;
        }
    }
    return v;
}

rational term_floor(const hyper_term &t)
{
    rational v = t.mono.q_exp();
    for (const auto &p : t.num) {
        v += poch_floor(p);
    }
    for (const auto &p : t.den) {
        v -= poch_floor(p);
    }
    return v;
}

series eval_term(const hyper_term &t, const rational &N)
{
    rational num_floor = 0;
    rational den_floor = 0;
    for (const auto &p : t.num) {
        num_floor += poch_floor(p);
    }
    for (const auto &p : t.den) {
        den_floor += poch_floor(p);
    }
    rational work = N - t.mono.q_exp() - num_floor - den_floor;
    series num = t.mono.to_series();
    for (const auto &p : t.num) {
        num = num * poch_finite(p.a, p.m, p.len, work);
        if (num.is_zero()) {
            return series::zero(N);
        }
    }
    if (t.den.empty()) {
        return num.truncated(N);
    }
    series den = series::constant(1);
    for (const auto &p : t.den) {
        den = den * poch_finite(p.a, p.m, p.len, work);
    }
    return (num * invert(den, work)).truncated(N);
}

// sum_{n >= n0} make(n)
template <typename Make>
series hyper_sum(const rational &order, Make &&make, std::int64_t n0 = 0)
{
    return at_order(order, [&](const rational &N) {
        return sum_while_below(
            N,
            [&](std::int64_t n) {
                hyper_term t = make(n);
                if (term_floor(t) >= N) {
                    return series::zero(N);
                }
                return eval_term(t, N);
            },
            [&](std::int64_t n) { return term_floor(make(n)); }, n0);
    });
}

std::int64_t arg_int(const catalog_args &args, std::size_t i)
{
    const monomial &m = args.at(i).value();
    if (m.q_exp() != 0 || m.has_symbols() || !is_integer(m.scalar())) {
        throw std::invalid_argument("expected an integer argument");
    }
    return to_int64(m.scalar().get_num());
}

const monomial &arg_mono(const catalog_args &args, std::size_t i)
{
    return args.at(i).value();
}

// (r; q^m)_len r^{-len}, with the rho -> inf limit (-1)^len q^{m C(len,2)}.
void add_scaled_rho(hyper_term &t, const rho_spec &r, const rational &m, std::int64_t len)
{
    if (r.is_infinite()) {
        t.mono = t.mono * sgn(len) * Q(m * rat(choose2(len)));
        return;
    }
    t.num.push_back({r.value(), m, len});
    t.mono = t.mono * r.value().pow(-len);
}

// (x; q^m)_len with x = c / r, which tends to 1 when r is inf.
void add_over_rho(std::vector<poch_factor> &side, const monomial &c, const rho_spec &r, const rational &m,
                  std::int64_t len)
{
    if (!r.is_infinite()) {
        side.push_back({c / r.value(), m, len});
    }
}

series pinf(const monomial &a, const rational &m, const rational &N)
{
    return poch_infinite(a, m, N);
}

// ---- classical series ----

series eval_f3(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) {
        return hyper_term{Q(n * n), {}, {{-Q(1), 1, n}, {-Q(1), 1, n}}};
    });
}

series eval_chi10(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) {
        return hyper_term{sgn(n) * Q((n + 1) * (n + 1)), {}, {{-Q(1), 1, 2 * n + 1}}};
    });
}

series eval_X10(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) { return hyper_term{sgn(n) * Q(n * n), {}, {{-Q(1), 1, 2 * n}}}; });
}

series eval_chi3(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) {
        return hyper_term{Q(n * n), {{-Q(1), 1, n}}, {{-Q(3), 3, n}}};
    });
}

series eval_mu(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) {
        return hyper_term{sgn(n) * Q(n * n), {{Q(1), 2, n}}, {{-Q(2), 2, n}, {-Q(2), 2, n}}};
    });
}

series eval_f1(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) { return hyper_term{Q(n * n + n), {}, {{-Q(1), 1, n}}}; });
}

series eval_phi10(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) { return hyper_term{Q(choose2(n + 1)), {}, {{Q(1), 2, n + 1}}}; });
}

series eval_T1(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) {
        return hyper_term{Q(n), {{monomial(-1), 1, n}, {monomial(-1), 1, n}}, {{Q(1), 1, n}, {Q(1), 2, n}}};
    });
}

series eval_T2(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) {
        return hyper_term{Q(n * n + n), {{monomial(-1), 2, n}, {Q(1), 2, n}}, {{Q(2), 2, n}, {-Q(1), 1, 2 * n}}};
    });
}

// ---- one-parameter families ----

series eval_S(const catalog_args &args, const rational &N)
{
    monomial x = arg_mono(args, 0);
    return hyper_sum(N, [x](std::int64_t n) {
        return hyper_term{Q(n), {{x, 1, n}, {x.inverse(), 1, n}}, {{Q(1), 1, n}}};
    });
}

series eval_S_mock(const catalog_args &args, const rational &N)
{
    monomial x = arg_mono(args, 0);
    return hyper_sum(N, [x](std::int64_t n) {
        return hyper_term{Q(n * n), {}, {{x * Q(1), 1, n}, {Q(1) / x, 1, n}}};
    });
}

// S at x = -e^{2 pi i/3}: (x, 1/x)_n = prod_{k<n} (1 - q^k + q^{2k}) since x + 1/x = 1.
series eval_S_negomega(const catalog_args &, const rational &N)
{
    return at_order(N, [&](const rational &W) {
        series total = series::zero(W);
        series numer = series::constant(1);
        series qn = series::constant(1);
        for (std::int64_t n = 0; n < W; ++n) {
            if (n > 0) {
                numer = (numer
                         * (series::constant(1) - Q(n - 1).to_series() + Q(2 * (n - 1)).to_series()))
                            .truncated(W);
                qn = qn * (series::constant(1) - Q(n).to_series());
                qn = qn.truncated(W);
            }
            total += Q(n).to_series() * numer * invert(qn, W);
        }
        return total;
    });
}

series eval_sspec_sum(const catalog_args &, const rational &N)
{
    series tail = hyper_sum(
        N,
        [](std::int64_t n) {
            return hyper_term{Q(n), {{-Q(3), 3, n - 1}}, {{-Q(1), 1, n - 1}, {Q(1), 1, n}}};
        },
        1);
    return series::constant(1) + tail;
}

series eval_gleissberg(const catalog_args &args, const rational &N)
{
    monomial y = arg_mono(args, 0);
    return hyper_sum(N, [y](std::int64_t n) {
        return hyper_term{Q(n), {{y, 1, n}, {Q(1) / y, 1, n}}, {{Q(1), 1, n}}};
    });
}

// sum q^{n^2+n} (y q^{n+1}, q^{n+2}/y)_inf, the universal sum times (y, q/y)_inf
series eval_gleissberg_rhs(const catalog_args &args, const rational &N)
{
    monomial y = arg_mono(args, 0);
    return at_order(N, [&](const rational &W) {
        return sum_while_below(
            W,
            [&](std::int64_t n) {
                series prod = pinf(y * Q(n + 1), 1, W) * pinf(Q(n + 2) / y, 1, W);
                return Q(n * n + n).to_series() * prod;
            },
            [](std::int64_t n) { return rat(n * n + n); });
    });
}

series eval_U(const catalog_args &args, const rational &N)
{
    monomial x = arg_mono(args, 0);
    return hyper_sum(N, [x](std::int64_t n) { return hyper_term{Q(n), {{x, 1, n}, {x.inverse(), 1, n}}, {}}; });
}

series eval_V(const catalog_args &args, const rational &N)
{
    monomial z = arg_mono(args, 0);
    return hyper_sum(N, [z](std::int64_t n) { return hyper_term{Q(n), {{z, 1, n}, {Q(1) / z, 1, n}}, {}}; });
}

series eval_W(const catalog_args &args, const rational &N)
{
    monomial z = arg_mono(args, 0);
    return hyper_sum(N, [z](std::int64_t n) {
        return hyper_term{Q(n), {{z, 1, n}, {Q(1) / z, 1, n}}, {{Q(1), 1, 2 * n}}};
    });
}

series eval_Y(const catalog_args &, const rational &N)
{
    return hyper_sum(N, [](std::int64_t n) { return hyper_term{Q(n), {}, {{Q(1), 2, n}, {Q(1), 1, n}}}; });
}

series eval_hikami(const catalog_args &, const rational &N)
{
    return at_order(N, [&](const rational &W) {
        series sum = hyper_sum(
            W, [](std::int64_t n) { return hyper_term{Q(2 * n), {{Q(1), 2, n}, {Q(1), 2, n}}, {}}; });
        series p = pinf(Q(1), 2, W);
        return sum * invert(p * p, W);
    });
}

series eval_J1gf(const catalog_args &, const rational &N)
{
    return at_order(N, [&](const rational &W) {
        series sum = hyper_sum(W, [](std::int64_t n) {
            return hyper_term{Q(3 * n * n + n), {}, {{Q(2), 2, n}, {Q(2), 4, n}}};
        });
        return pinf(-Q(1), 2, W) * sum;
    });
}

// ---- printed right-hand sums ----

series eval_f1_hecke(const catalog_args &, const rational &N)
{
    series_accumulator acc;
    for (std::int64_t n = 0; rat(3 * n * n + 3 * n) / 2 < N; ++n) {
        for (std::int64_t j = -n; j <= n; ++j) {
            monomial m = sgn(j < 0 ? -j : j) * Q(rat(n * (5 * n + 3)) / 2 - rat(j * j));
            acc.add(m);
            acc.add(-m * Q(2 * n + 1));
        }
    }
    return acc.build(N);
}

series eval_J1_hecke(const catalog_args &, const rational &N)
{
    series_accumulator acc;
    for (std::int64_t n = 0; rat(5 * n * n) / 2 + rat(n) < N; ++n) {
        for (std::int64_t j = -n; j <= n; ++j) {
            if (2 * (j < 0 ? -j : j) > n) {
                continue;
            }
            monomial m = sgn(j < 0 ? -j : j) * Q(4 * n * n + 2 * n - j * (6 * j + 2));
            acc.add(m);
            acc.add(-m * Q(4 * n + 2));
        }
    }
    return acc.build(N);
}

// ---- multisums ----

std::int64_t quadratic_cutoff(const rational &N)
{
    std::int64_t n = 0;
    while (rat(n * n) < N) {
        ++n;
    }
    return n;
}

std::vector<series> inverse_q_pochhammers(std::int64_t count, const rational &N)
{
    std::vector<series> out;
    series p = series::constant(1);
    for (std::int64_t j = 0; j <= count; ++j) {
        if (j > 0) {
            p = (p * (series::constant(1) - Q(j).to_series())).truncated(N);
        }
        out.push_back(invert(p, N));
    }
    return out;
}

// F_{i+1}(n) = q^{lead(n)} sum_{m <= n} F_i(m) / (q)_{n-m}
std::vector<series> chain_layer(const std::vector<series> &inner, const std::vector<series> &inv_q,
                                const std::function<std::int64_t(std::int64_t)> &lead, const rational &N)
{
    std::vector<series> out;
    for (std::size_t n = 0; n < inner.size(); ++n) {
        auto ln = lead(static_cast<std::int64_t>(n));
        if (rat(ln) >= N) {
            out.push_back(series::zero(N));
            continue;
        }
        series acc = series::zero(N);
        for (std::size_t m = 0; m <= n; ++m) {
            acc += inner[m] * inv_q[n - m];
        }
        out.push_back((Q(ln).to_series() * acc).truncated(N));
    }
    return out;
}

series eval_B(const catalog_args &args, const rational &N)
{
    std::int64_t k = arg_int(args, 0);
    if (k < 1) {
        throw std::invalid_argument("B(k) needs k >= 1");
    }
    std::int64_t top = quadratic_cutoff(N);
    std::vector<series> inv_q = inverse_q_pochhammers(top, N);
    std::vector<series> layer;
    for (std::int64_t n = 0; n <= top; ++n) {
        series d = poch_finite(-Q(1), 1, n, N);
        layer.push_back((Q(n * n).to_series() * invert(d * d, N)).truncated(N));
    }
    auto square = [](std::int64_t n) { return n * n; };
    for (std::int64_t i = 1; i < k; ++i) {
        layer = chain_layer(layer, inv_q, square, N);
    }
    series total = series::zero(N);
    for (const auto &s : layer) {
        total += s;
    }
    return total;
}

series eval_M(const catalog_args &args, const rational &N)
{
    std::int64_t k = arg_int(args, 0);
    if (k < 1) {
        throw std::invalid_argument("M(k) needs k >= 1");
    }
    std::int64_t len = 0;
    while (rat(choose2(len + 1)) < N) {
        ++len;
    }
    std::vector<series> inv_q = inverse_q_pochhammers(2 * len + 1, N);
    std::vector<series> layer;
    // 1 / (q^{n+1})_{n+1} = (q)_n / (q)_{2n+1}
    for (std::int64_t n = 0; n < len; ++n) {
        layer.push_back((poch_finite(Q(1), 1, n, N) * inv_q[2 * n + 1]).truncated(N));
    }
    if (k >= 2) {
        for (std::int64_t n = 0; n < len; ++n) {
            layer[n] = (Q(n * n + n).to_series() * layer[n]).truncated(N);
        }
        auto lead = [](std::int64_t n) { return n * n + n; };
        for (std::int64_t i = 2; i < k; ++i) {
            layer = chain_layer(layer, inv_q, lead, N);
        }
        auto zero_lead = [](std::int64_t) { return std::int64_t{0}; };
        layer = chain_layer(layer, inv_q, zero_lead, N);
    }
    series total = series::zero(N);
    for (std::int64_t n = 0; n < len; ++n) {
        if (rat(choose2(n + 1)) >= N) {
            continue;
        }
        total += Q(choose2(n + 1)).to_series() * poch_finite(-Q(1), 1, n, N) * layer[n];
    }
    return total;
}

// ---- generic transformation sides ----

// sum_{n >= 1} (-a)_n (-b)_n q^n
series eval_lhs3t(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    monomial b = arg_mono(args, 1);
    return hyper_sum(N, [a, b](std::int64_t n) { return hyper_term{Q(n), {{-a, 1, n}, {-b, 1, n}}, {}}; }, 1);
}

// sum_{n >= 0} (ab)^{-n} q^{n^2} / (-q/a, -q/b)_n
series eval_tail3t(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    monomial b = arg_mono(args, 1);
    return hyper_sum(N, [a, b](std::int64_t n) {
        return hyper_term{(a * b).pow(-n) * Q(n * n), {}, {{-Q(1) / a, 1, n}, {-Q(1) / b, 1, n}}};
    });
}

series eval_ww_lhs(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    monomial b = arg_mono(args, 1);
    monomial c = arg_mono(args, 2);
    monomial d = arg_mono(args, 3);
    monomial e = arg_mono(args, 4);
    monomial aq = a * Q(1);
    return hyper_sum(N, [=](std::int64_t n) {
        return hyper_term{(aq / (d * e)).pow(n),
                          {{aq / (b * c), 1, n}, {d, 1, n}, {e, 1, n}},
                          {{Q(1), 1, n}, {aq / b, 1, n}, {aq / c, 1, n}}};
    });
}

// (a)_n (1 - a q^{2n}) / (1 - a) at base q^m, written so a = 1 is allowed:
// 1 for n = 0 and (a q^m; q^m)_{n-1} (1 - a q^{2 n m}) otherwise.
void add_well_poised_lead(hyper_term &t, const monomial &a, const rational &m, std::int64_t n, std::int64_t step)
{
    if (n == 0) {
        return;
    }
    t.num.push_back({a * Q(m), m, n - 1});
    t.num.push_back({a * Q(m * rat(step * n)), 1, 1});
}

series eval_ww_rhs(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    monomial b = arg_mono(args, 1);
    monomial c = arg_mono(args, 2);
    monomial d = arg_mono(args, 3);
    monomial e = arg_mono(args, 4);
    monomial aq = a * Q(1);
    return at_order(N, [&](const rational &W) {
        series pre = pinf(aq / d, 1, W) * pinf(aq / e, 1, W)
                     * invert(pinf(aq, 1, W) * pinf(aq / (d * e), 1, W), W);
        series sum = hyper_sum(W, [=](std::int64_t n) {
            hyper_term t{sgn(n) * Q(choose2(n)) * (aq * aq / (b * c * d * e)).pow(n),
                         {{b, 1, n}, {c, 1, n}, {d, 1, n}, {e, 1, n}},
                         {{Q(1), 1, n}, {aq / b, 1, n}, {aq / c, 1, n}, {aq / d, 1, n}, {aq / e, 1, n}}};
            add_well_poised_lead(t, a, 1, n, 2);
            return t;
        });
        return pre * sum;
    });
}

series eval_bt_lhs(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    rho_spec f = args.at(1);
    rho_spec r1 = args.at(2);
    rho_spec r2 = args.at(3);
    monomial aq = a * Q(1);
    return hyper_sum(N, [=](std::int64_t n) {
        hyper_term t{aq.pow(n), {}, {{Q(1), 1, n}, {aq, 2, n}}};
        add_scaled_rho(t, r1, 1, n);
        add_scaled_rho(t, r2, 1, n);
        add_over_rho(t.num, aq, f, 2, n);
        add_over_rho(t.den, aq, f, 1, n);
        return t;
    });
}

series eval_bt_rhs(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    rho_spec f = args.at(1);
    rho_spec r1 = args.at(2);
    rho_spec r2 = args.at(3);
    monomial aq = a * Q(1);
    return at_order(N, [&](const rational &W) {
        series num = series::constant(1);
        series den = pinf(aq, 1, W);
        for (const rho_spec *r : {&r1, &r2}) {
            if (!r->is_infinite()) {
                num = num * pinf(aq / r->value(), 1, W);
            }
        }
        if (!r1.is_infinite() && !r2.is_infinite()) {
            den = den * pinf(aq / (r1.value() * r2.value()), 1, W);
        }
        series sum = hyper_sum(W, [=](std::int64_t n) {
            // (rho)_{2n} rho^{-2n} carries (a^3/rho1^2 rho2^2 f)^n
            hyper_term t{a.pow(3 * n) * Q(2 * n * n + 2 * n), {}, {{Q(2), 2, n}}};
            add_scaled_rho(t, r1, 1, 2 * n);
            add_scaled_rho(t, r2, 1, 2 * n);
            add_scaled_rho(t, f, 2, n);
            add_over_rho(t.den, aq * Q(1), f, 2, n);
            add_over_rho(t.den, aq, r1, 1, 2 * n);
            add_over_rho(t.den, aq, r2, 1, 2 * n);
            add_well_poised_lead(t, a, 2, n, 2);
            return t;
        });
        return num * invert(den, W) * sum;
    });
}

series eval_btbis_lhs(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    monomial b = arg_mono(args, 1);
    rho_spec r1 = args.at(2);
    rho_spec r2 = args.at(3);
    monomial aq = a * Q(1);
    return hyper_sum(N, [=](std::int64_t n) {
        hyper_term t{(aq * aq).pow(n),
                     {{-aq / b, 1, 2 * n}},
                     {{Q(2), 2, n}, {aq * aq / (b * b), 2, n}, {-aq, 1, 2 * n}}};
        add_scaled_rho(t, r1, 2, n);
        add_scaled_rho(t, r2, 2, n);
        return t;
    });
}

series eval_btbis_rhs(const catalog_args &args, const rational &N)
{
    monomial a = arg_mono(args, 0);
    monomial b = arg_mono(args, 1);
    rho_spec r1 = args.at(2);
    rho_spec r2 = args.at(3);
    monomial aq = a * Q(1);
    monomial a2q2 = aq * aq;
    return at_order(N, [&](const rational &W) {
        series num = series::constant(1);
        series den = pinf(a2q2, 2, W);
        for (const rho_spec *r : {&r1, &r2}) {
            if (!r->is_infinite()) {
                num = num * pinf(a2q2 / r->value(), 2, W);
            }
        }
        if (!r1.is_infinite() && !r2.is_infinite()) {
            den = den * pinf(a2q2 / (r1.value() * r2.value()), 2, W);
        }
        series sum = hyper_sum(W, [=](std::int64_t n) {
            hyper_term t{(a.pow(3) / b).pow(n) * Q(n * n + 2 * n), {{b, 1, n}}, {{Q(1), 1, n}, {aq / b, 1, n}}};
            add_scaled_rho(t, r1, 2, n);
            add_scaled_rho(t, r2, 2, n);
            add_over_rho(t.den, a2q2, r1, 2, n);
            add_over_rho(t.den, a2q2, r2, 2, n);
            add_well_poised_lead(t, a, 1, n, 2);
            return t;
        });
        return num * invert(den, W) * sum;
    });
}

// ---- oracles ----

// sum_n (-1)^n q^{n(3n-1)/2}
series eval_pent(const catalog_args &, const rational &N)
{
    series_accumulator acc;
    for (std::int64_t n = 0; rat(n * (3 * n - 1)) / 2 < N; ++n) {
        acc.add(sgn(n) * Q(rat(n * (3 * n - 1)) / 2));
        if (n > 0) {
            acc.add(sgn(n) * Q(rat(n * (3 * n + 1)) / 2));
        }
    }
    return acc.build(N);
}

// sum_{n in Z} (-1)^n q^{m C(n,2)} x^n, the bilateral side of the triple product
series eval_jtp(const catalog_args &args, const rational &N)
{
    monomial x = arg_mono(args, 0);
    std::int64_t m = arg_int(args, 1);
    if (m < 1) {
        throw std::invalid_argument("jtp needs a positive modulus");
    }
    auto exponent = [&](std::int64_t n) -> rational { return rat(m * choose2(n)) + rat(n) * x.q_exp(); };
    series_accumulator acc;
    for (int dir : {1, -1}) {
        for (std::int64_t n = dir == 1 ? 0 : -1;; n += dir) {
            rational e = exponent(n);
            if (e >= N && exponent(n + dir) >= e) {
                break;
            }
            if (e < N) {
                acc.add(sgn(n < 0 ? -n : n) * x.pow(n) * Q(rat(m * choose2(n))));
            }
        }
    }
    return acc.build(N);
}

std::vector<catalog_entry> build_entries()
{
    using K = param_kind;
    std::vector<catalog_entry> e;
    auto add = [&](std::string name, std::vector<catalog_param> params, std::string ref, std::string def,
                   series (*fn)(const catalog_args &, const rational &)) {
        e.push_back({std::move(name), std::move(params), std::move(ref), std::move(def), fn});
    };
    add("B", {{"k", K::integer}}, "eq. (Bk)",
        "sum_{n_k >= ... >= n_1 >= 0} q^{n_k^2+...+n_1^2} / ((q)_{n_k-n_{k-1}} ... (q)_{n_2-n_1} (-q)_{n_1}^2)", eval_B);
    add("M", {{"k", K::integer}}, "M^(k) display, section 3.2",
        "sum (-q)_{n_k} q^{C(n_k+1,2) + n_{k-1}^2 + n_{k-1} + ... + n_1^2 + n_1} / ((q)_{n_k-n_{k-1}} ... "
        "(q^{n_1+1})_{n_1+1})",
        eval_M);
    add("f3", {}, "eq. (fofq)", "sum q^{n^2} / (-q)_n^2", eval_f3);
    add("chi10", {}, "tenth order chi, section 1", "sum (-1)^n q^{(n+1)^2} / (-q)_{2n+1}", eval_chi10);
    add("X10", {}, "tenth order X, section 1", "sum (-1)^n q^{n^2} / (-q)_{2n}", eval_X10);
    add("chi3", {}, "third order chi after eq. (Sspec)", "sum q^{n^2} (-q)_n / (-q^3;q^3)_n", eval_chi3);
    add("mu", {}, "second order mu, section 3.1", "sum (q;q^2)_n (-1)^n q^{n^2} / (-q^2;q^2)_n^2", eval_mu);
    add("f1", {}, "fifth order f_1, section 3.2", "sum q^{n^2+n} / (-q)_n", eval_f1);
    add("phi10", {}, "tenth order phi, section 3.2", "sum q^{C(n+1,2)} / (q;q^2)_{n+1}", eval_phi10);
    add("T1", {}, "eq. (T1)", "sum (-1)_n^2 q^n / ((q)_n (q;q^2)_n)", eval_T1);
    add("T2", {}, "eq. (T2)", "sum (-1;q^2)_n (q;q^2)_n q^{n^2+n} / ((q^2;q^2)_n (-q)_{2n})", eval_T2);
    add("S", {{"x", K::monomial}}, "eq. (S) left side", "sum (x, 1/x)_n q^n / (q)_n", eval_S);
    add("S_mock", {{"x", K::monomial}}, "eq. (S) right side", "sum q^{n^2} / (xq, q/x)_n", eval_S_mock);
    add("S_negomega", {}, "eq. (Sspec) left side", "sum prod_{k<n} (1 - q^k + q^{2k}) q^n / (q)_n", eval_S_negomega);
    add("sspec_sum", {}, "eq. (Sspec) middle", "1 + sum_{n>=1} (-q^3;q^3)_{n-1} q^n / ((-q)_{n-1} (q)_n)",
        eval_sspec_sum);
    add("gleissberg", {{"y", K::monomial}}, "eq. (Gleissberg) left side", "sum (y, q/y)_n q^n / (q)_n",
        eval_gleissberg);
    add("gleissberg_rhs", {{"y", K::monomial}}, "eq. (Gleissberg) right side",
        "sum q^{n^2+n} (y q^{n+1}, q^{n+2}/y)_inf", eval_gleissberg_rhs);
    add("U", {{"x", K::monomial}}, "eq. (3tspec)", "sum (x, 1/x)_n q^n", eval_U);
    add("V", {{"z", K::monomial}}, "V display, section 3.3", "sum q^n (z, q/z)_n", eval_V);
    add("W", {{"z", K::monomial}}, "W display, section 3.3", "sum (z, q/z)_n q^n / (q)_{2n}", eval_W);
    add("Y", {}, "Y display, section 3.3", "sum q^n / ((q;q^2)_n (q)_n)", eval_Y);
    add("hikami", {}, "Hikami case, section 3.3", "sum (q;q^2)_n^2 q^{2n} / (q;q^2)_inf^2", eval_hikami);
    add("J1gf", {}, "eq. (J) first line", "(-q;q^2)_inf sum q^{3n^2+n} / ((q^2;q^2)_n (q^2;q^4)_n)", eval_J1gf);
    add("f1_hecke", {}, "eq. (f1tof) first line",
        "sum_{n>=0} sum_{|j|<=n} (-1)^j q^{n(5n+3)/2 - j^2} (1 - q^{2n+1})", eval_f1_hecke);
    add("J1_hecke", {}, "eq. (J) second line",
        "sum_{n>=0} sum_{|2j|<=n} (-1)^j q^{4n^2+2n-j(6j+2)} (1 - q^{4n+2})", eval_J1_hecke);
    add("lhs3t", {{"a", K::monomial}, {"b", K::monomial}}, "eq. (3t) left side", "sum_{n>=1} (-a)_n (-b)_n q^n",
        eval_lhs3t);
    add("tail3t", {{"a", K::monomial}, {"b", K::monomial}}, "eq. (3t) last sum",
        "sum (ab)^{-n} q^{n^2} / (-q/a, -q/b)_n", eval_tail3t);
    add("ww_lhs", {{"a", K::monomial}, {"b", K::monomial}, {"c", K::monomial}, {"d", K::monomial}, {"e", K::monomial}},
        "eq. (Watson-Whipple) left side", "sum (aq/bc, d, e)_n (aq/de)^n / (q, aq/b, aq/c)_n", eval_ww_lhs);
    add("ww_rhs", {{"a", K::monomial}, {"b", K::monomial}, {"c", K::monomial}, {"d", K::monomial}, {"e", K::monomial}},
        "eq. (Watson-Whipple) right side",
        "(aq/d, aq/e)_inf / (aq, aq/de)_inf sum (a)_n (1 - aq^{2n}) (b,c,d,e)_n (-1)^n q^{C(n,2)} (aq)^{2n} / "
        "((q)_n (1-a) (aq/b, aq/c, aq/d, aq/e)_n (bcde)^n)",
        eval_ww_rhs);
    add("bt_lhs", {{"a", K::monomial}, {"f", K::extended}, {"rho1", K::extended}, {"rho2", K::extended}},
        "eq. (Baileytrans) left side",
        "sum (rho1, rho2)_n (aq/f;q^2)_n (aq/rho1 rho2)^n / ((q, aq/f)_n (aq;q^2)_n)", eval_bt_lhs);
    add("bt_rhs", {{"a", K::monomial}, {"f", K::extended}, {"rho1", K::extended}, {"rho2", K::extended}},
        "eq. (Baileytrans) right side",
        "(aq/rho1, aq/rho2)_inf / (aq, aq/rho1 rho2)_inf sum (1 - aq^{4n}) (a, f;q^2)_n (rho1, rho2)_{2n} "
        "(a^3/rho1^2 rho2^2 f)^n q^{2n^2+2n} / ((1-a) (q^2, aq^2/f;q^2)_n (aq/rho1, aq/rho2)_{2n})",
        eval_bt_rhs);
    add("btbis_lhs", {{"a", K::monomial}, {"b", K::monomial}, {"r1", K::extended}, {"r2", K::extended}},
        "eq. (Baileytransbis) left side",
        "sum (r1, r2;q^2)_n (-aq/b)_{2n} (a^2 q^2/r1 r2)^n / ((q^2, a^2 q^2/b^2;q^2)_n (-aq)_{2n})", eval_btbis_lhs);
    add("btbis_rhs", {{"a", K::monomial}, {"b", K::monomial}, {"r1", K::extended}, {"r2", K::extended}},
        "eq. (Baileytransbis) right side",
        "(a^2q^2/r1, a^2q^2/r2;q^2)_inf / (a^2q^2, a^2q^2/r1 r2;q^2)_inf sum (1 - aq^{2n}) (a, b)_n (r1, r2;q^2)_n "
        "(a^3/b r1 r2)^n q^{n^2+2n} / ((1-a) (q, aq/b)_n (a^2q^2/r1, a^2q^2/r2;q^2)_n)",
        eval_btbis_rhs);
    add("pent", {}, "Euler pentagonal number theorem", "sum_{n in Z} (-1)^n q^{n(3n-1)/2}", eval_pent);
    add("jtp", {{"x", K::monomial}, {"m", K::integer}}, "eq. (j1) context, Jacobi triple product",
        "sum_{n in Z} (-1)^n q^{m C(n,2)} x^n", eval_jtp);
    return e;
}

} // namespace

const std::vector<catalog_entry> &list_entries()
{
    static const std::vector<catalog_entry> entries = build_entries();
    return entries;
}

bool has_entry(const std::string &name)
{
    const auto &all = list_entries();
    return std::any_of(all.begin(), all.end(), [&](const catalog_entry &e) { return e.name == name; });
}

const catalog_entry &find_entry(const std::string &name)
{
    for (const auto &e : list_entries()) {
        if (e.name == name) {
            return e;
        }
    }
    throw unknown_entry("unknown catalog entry '" + name + "'");
}

series eval_named(const std::string &name, const catalog_args &args, const rational &order)
{
    const catalog_entry &e = find_entry(name);
    if (args.size() != e.params.size()) {
        throw std::invalid_argument(name + " takes " + std::to_string(e.params.size()) + " argument(s)");
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (e.params[i].kind != param_kind::extended && args[i].is_infinite()) {
            throw std::invalid_argument(name + ": argument '" + e.params[i].name + "' cannot be inf");
        }
        if (e.params[i].kind == param_kind::integer) {
            arg_int(args, i);
        }
    }
    return e.eval(args, order);
}

} // namespace qv
