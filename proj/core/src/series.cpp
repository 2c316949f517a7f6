#include <qv/series.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <qv/errors.hpp>

namespace qv {

namespace {

constexpr std::int64_t kExact = series::exact_units;

std::int64_t sat_add(std::int64_t a, std::int64_t b)
{
    if (a == kExact || b == kExact) {
        return kExact;
    }
    return a + b;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    // b > 0
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) {
        ++q;
    }
    return q;
}

} // namespace

series::series(std::int64_t den, std::int64_t trunc_units, std::vector<term> terms)
    : den_(den), trunc_(trunc_units), terms_(std::move(terms))
{
    if (den_ <= 0) {
        throw std::invalid_argument("series denominator must be positive");
    }
    std::sort(terms_.begin(), terms_.end(), [](const term &a, const term &b) { return a.first < b.first; });
    std::vector<term> merged;
    merged.reserve(terms_.size());
    for (auto &t : terms_) {
        if (t.first >= trunc_) {
            break;
        }
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
            if (merged.back().second.is_zero()) {
                merged.pop_back();
            }
        } else if (!t.second.is_zero()) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
    normalize_den();
}

series series::constant(const coefficient &c)
{
    series s;
    if (!c.is_zero()) {
        s.terms_.emplace_back(0, c);
    }
    return s;
}

series series::zero(const rational &order)
{
    series s;
    s.den_ = to_int64(order.get_den());
    s.trunc_ = to_units(order, s.den_);
    return s;
}

series series::q_power(const rational &e, const coefficient &c)
{
    series s;
    s.den_ = to_int64(e.get_den());
    if (!c.is_zero()) {
        s.terms_.emplace_back(to_units(e, s.den_), c);
    }
    return s;
}

std::optional<rational> series::trunc() const
{
    if (is_exact()) {
        return std::nullopt;
    }
    return make_rational(static_cast<long>(trunc_), static_cast<long>(den_));
}

std::optional<rational> series::val() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    return make_rational(static_cast<long>(terms_.front().first), static_cast<long>(den_));
}

coefficient series::coeff(const rational &e) const
{
    if (!is_exact() && e >= *trunc()) {
        throw order_beyond_truncation("coefficient of q^" + qv::to_string(e)
                                      + " requested beyond truncation order " + qv::to_string(*trunc()));
    }
    rational scaled = e * rational(static_cast<long>(den_));
    if (!is_integer(scaled)) {
        return {};
    }
    std::int64_t u = to_int64(scaled.get_num());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), u,
                               [](const term &t, std::int64_t v) { return t.first < v; });
    if (it != terms_.end() && it->first == u) {
        return it->second;
    }
    return {};
}

series series::truncated(const rational &order) const
{
    std::int64_t d = lcm_den(den_, order);
    series r = lifted(d);
    std::int64_t t = to_units(order, d);
    if (t < r.trunc_) {
        r.trunc_ = t;
        r.drop_beyond_trunc();
    }
    r.normalize_den();
    return r;
}

series series::lifted(std::int64_t den) const
{
    if (den == den_) {
        return *this;
    }
    if (den % den_ != 0) {
        throw std::invalid_argument("lifted: target denominator is not a multiple");
    }
    std::int64_t f = den / den_;
    series r;
    r.den_ = den;
    r.trunc_ = trunc_ == kExact ? kExact : trunc_ * f;
    r.terms_.reserve(terms_.size());
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_back(e * f, c);
    }
    return r;
}

void series::drop_beyond_trunc()
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), trunc_,
                               [](const term &t, std::int64_t v) { return t.first < v; });
    terms_.erase(it, terms_.end());
}

void series::normalize_den()
{
    if (den_ == 1) {
        return;
    }
    std::int64_t g = den_;
    for (const auto &t : terms_) {
        g = std::gcd(g, t.first);
        if (g == 1) {
            return;
        }
    }
    if (g <= 1) {
        return;
    }
    den_ /= g;
    for (auto &t : terms_) {
        t.first /= g;
    }
    if (trunc_ != kExact) {
        trunc_ = ceil_div(trunc_, g);
    }
}

series series::operator-() const
{
    series r = *this;
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

namespace {

void add_impl(series &a, const series &b, int sign, std::int64_t &den, std::int64_t &trunc,
              std::vector<series::term> &out)
{
    std::int64_t d = std::lcm(a.den(), b.den());
    series la = a.lifted(d);
    series lb = b.lifted(d);
    den = d;
    trunc = std::min(la.trunc_units(), lb.trunc_units());
    const auto &ta = la.terms();
    const auto &tb = lb.terms();
    out.reserve(ta.size() + tb.size());
    auto i = ta.begin();
    auto j = tb.begin();
    while (i != ta.end() || j != tb.end()) {
        if (j == tb.end() || (i != ta.end() && i->first < j->first)) {
            if (i->first >= trunc) {
                i = ta.end();
                continue;
            }
            out.push_back(*i++);
        } else if (i == ta.end() || j->first < i->first) {
            if (j->first >= trunc) {
                j = tb.end();
                continue;
            }
            out.emplace_back(j->first, sign > 0 ? j->second : -j->second);
            ++j;
        } else {
            if (i->first >= trunc) {
                i = ta.end();
                j = tb.end();
                continue;
            }
            coefficient c = i->second;
            if (sign > 0) {
                c += j->second;
            } else {
                c -= j->second;
            }
            if (!c.is_zero()) {
                out.emplace_back(i->first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
}

} // namespace

series &series::operator+=(const series &o)
{
    std::vector<term> out;
    std::int64_t d = 1;
    std::int64_t t = kExact;
    add_impl(*this, o, 1, d, t, out);
    den_ = d;
    trunc_ = t;
    terms_ = std::move(out);
    normalize_den();
    return *this;
}

series &series::operator-=(const series &o)
{
    std::vector<term> out;
    std::int64_t d = 1;
    std::int64_t t = kExact;
    add_impl(*this, o, -1, d, t, out);
    den_ = d;
    trunc_ = t;
    terms_ = std::move(out);
    normalize_den();
    return *this;
}

series operator*(const series &a0, const series &b0)
{
    std::int64_t d = std::lcm(a0.den(), b0.den());
    series a = a0.lifted(d);
    series b = b0.lifted(d);
    // Lower bound on the valuation: the truncation order stands in for a truncated zero.
    std::int64_t va = a.terms().empty() ? a.trunc_units() : a.terms().front().first;
    std::int64_t vb = b.terms().empty() ? b.trunc_units() : b.terms().front().first;
    std::int64_t trunc = std::min(sat_add(a.trunc_units(), vb), sat_add(b.trunc_units(), va));

    series r;
    r.den_ = d;
    r.trunc_ = trunc;
    if (a.terms().empty() || b.terms().empty()) {
        r.normalize_den();
        return r;
    }
    if (b.terms().size() == 1) {
        const auto &[e, c] = b.terms().front();
        for (const auto &[ea, ca] : a.terms()) {
            if (ea + e >= trunc) {
                break;
            }
            r.terms_.emplace_back(ea + e, ca * c);
        }
        r.normalize_den();
        return r;
    }
    if (a.terms().size() == 1) {
        return b0 * a0;
    }

    std::int64_t lo = a.terms().front().first + b.terms().front().first;
    std::int64_t hi = a.terms().back().first + b.terms().back().first + 1;
    if (trunc != kExact) {
        hi = std::min(hi, trunc);
    }
    std::size_t pairs = a.terms().size() * b.terms().size();
    if (hi - lo <= static_cast<std::int64_t>(4 * pairs + 1024)) {
        std::vector<coefficient> acc(static_cast<std::size_t>(std::max<std::int64_t>(hi - lo, 0)));
        for (const auto &[ea, ca] : a.terms()) {
            for (const auto &[eb, cb] : b.terms()) {
                std::int64_t e = ea + eb;
                if (e >= hi) {
                    break;
                }
                acc[static_cast<std::size_t>(e - lo)].add_product(ca, cb);
            }
        }
        for (std::size_t k = 0; k < acc.size(); ++k) {
            if (!acc[k].is_zero()) {
                r.terms_.emplace_back(lo + static_cast<std::int64_t>(k), std::move(acc[k]));
            }
        }
    } else {
        std::map<std::int64_t, coefficient> acc;
        for (const auto &[ea, ca] : a.terms()) {
            for (const auto &[eb, cb] : b.terms()) {
                std::int64_t e = ea + eb;
                if (e >= hi) {
                    break;
                }
                acc[e].add_product(ca, cb);
            }
        }
        for (auto &[e, c] : acc) {
            if (!c.is_zero()) {
                r.terms_.emplace_back(e, std::move(c));
            }
        }
    }
    r.normalize_den();
    return r;
}

series &series::operator*=(const series &o)
{
    *this = *this * o;
    return *this;
}

series series::scaled(const rational &c) const
{
    if (c == 0) {
        series r;
        r.den_ = den_;
        r.trunc_ = trunc_;
        return r;
    }
    series r = *this;
    for (auto &t : r.terms_) {
        t.second *= c;
    }
    return r;
}

series series::times_monomial(const rational &c, std::int64_t q_units, const sym_exps &e) const
{
    series r;
    r.den_ = den_;
    r.trunc_ = sat_add(trunc_, q_units);
    if (c == 0) {
        r.trunc_ = kExact;
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &[ex, cf] : terms_) {
        r.terms_.emplace_back(ex + q_units, cf.times_monomial(c, e));
    }
    return r;
}

bool series::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const term &t) { return t.second.is_integral(); });
}

std::string series::to_string(const symbol_context &ctx) const
{
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        bool compound = c.terms().size() > 1;
        bool negative = !compound && c.terms().front().second < 0;
        coefficient mag = negative ? -c : c;
        if (first) {
            if (negative) {
                os << '-';
            }
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        rational ex = make_rational(static_cast<long>(e), static_cast<long>(den_));
        std::string cs = mag.to_string(ctx);
        if (e == 0) {
            os << (compound ? "(" + cs + ")" : cs);
            continue;
        }
        if (compound) {
            os << '(' << cs << ")*";
        } else if (cs != "1") {
            os << cs << '*';
        }
        os << 'q';
        if (ex != 1) {
            if (is_integer(ex)) {
                os << '^' << qv::to_string(ex);
            } else {
                os << "^(" << qv::to_string(ex) << ')';
            }
        }
    }
    if (first) {
        os << '0';
    }
    if (!is_exact()) {
        rational t = *trunc();
        os << " + O(q^";
        if (is_integer(t)) {
            os << qv::to_string(t);
        } else {
            os << '(' << qv::to_string(t) << ')';
        }
        os << ')';
    }
    return os.str();
}

series invert(const series &s, const std::optional<rational> &order)
{
    if (s.terms().empty()) {
        throw not_invertible("cannot invert the zero series");
    }
    const auto &lead = s.terms().front();
    if (!lead.second.is_unit()) {
        throw not_invertible("leading coefficient " + lead.second.to_string() + " is not a unit");
    }
    std::int64_t d = s.den();
    std::int64_t v = lead.first;
    coefficient lead_inv = lead.second.inverse();

    if (s.terms().size() == 1 && s.is_exact()) {
        return series(d, series::exact_units, {{-v, lead_inv}});
    }

    std::int64_t trunc = s.is_exact() ? series::exact_units : s.trunc_units() - 2 * v;
    if (order) {
        std::int64_t dd = lcm_den(d, *order);
        if (dd != d) {
            return invert(s.lifted(dd), order);
        }
        trunc = std::min(trunc, to_units(*order, d));
    }
    if (trunc == series::exact_units) {
        throw std::invalid_argument("invert: an exact non-monomial series needs an order");
    }
    std::int64_t rel = trunc + v;
    if (rel <= 0) {
        return series(d, trunc, {});
    }

    // u = s / (lead q^v) - 1, relative exponents > 0.
    std::vector<std::pair<std::int64_t, coefficient>> u;
    for (std::size_t i = 1; i < s.terms().size(); ++i) {
        std::int64_t k = s.terms()[i].first - v;
        if (k >= rel) {
            break;
        }
        u.emplace_back(k, s.terms()[i].second * lead_inv);
    }
    std::vector<coefficient> t(static_cast<std::size_t>(rel));
    t[0] = coefficient(1);
    for (std::int64_t e = 1; e < rel; ++e) {
        coefficient acc;
        for (const auto &[k, uk] : u) {
            if (k > e) {
                break;
            }
            const coefficient &prev = t[static_cast<std::size_t>(e - k)];
            if (!prev.is_zero()) {
                acc.add_product(uk, prev);
            }
        }
        t[static_cast<std::size_t>(e)] = -acc;
    }
    std::vector<series::term> out;
    out.reserve(t.size());
    for (std::int64_t e = 0; e < rel; ++e) {
        auto &c = t[static_cast<std::size_t>(e)];
        if (!c.is_zero()) {
            out.emplace_back(e - v, c * lead_inv);
        }
    }
    return series(d, trunc, std::move(out));
}

series substitute(const series &s, int sign, std::int64_t k)
{
    if (k <= 0) {
        throw std::invalid_argument("substitute: k must be positive");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("substitute: sign must be +1 or -1");
    }
    if (sign == -1 && s.den() != 1) {
        throw fractional_sign_substitution("q -> -q^k requires integer exponents");
    }
    std::vector<series::term> out;
    out.reserve(s.terms().size());
    for (const auto &[e, c] : s.terms()) {
        bool flip = sign == -1 && (e % 2 != 0);
        out.emplace_back(e * k, flip ? -c : c);
    }
    std::int64_t trunc = s.is_exact() ? series::exact_units : s.trunc_units() * k;
    return series(s.den(), trunc, std::move(out));
}

equality_report eq_up_to(const series &a, const series &b, const rational &order)
{
    for (const series *s : {&a, &b}) {
        if (!s->is_exact() && order > *s->trunc()) {
            throw order_beyond_truncation("comparison order " + to_string(order) + " exceeds truncation "
                                          + to_string(*s->trunc()));
        }
    }
    series diff = (a - b).truncated(order);
    equality_report rep;
    if (diff.terms().empty()) {
        return rep;
    }
    rep.equal = false;
    rational e = make_rational(static_cast<long>(diff.terms().front().first), static_cast<long>(diff.den()));
    rep.first_mismatch = mismatch{e, a.coeff(e), b.coeff(e)};
    return rep;
}

} // namespace qv
