#include <qv/coefficient.hpp>

#include <algorithm>
#include <sstream>

#include <qv/errors.hpp>

namespace qv {

symbol_context::symbol_context(std::initializer_list<std::string> names)
{
    for (const auto &n : names) {
        declare(n);
    }
}

std::size_t symbol_context::slot(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    throw undeclared_symbol("undeclared symbol '" + std::string(name) + "'");
}

bool symbol_context::declared(std::string_view name) const
{
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

void symbol_context::declare(const std::string &name)
{
    if (declared(name)) {
        return;
    }
    if (names_.size() == max_symbols) {
        throw error("too many formal symbols (at most " + std::to_string(max_symbols) + ")");
    }
    if (name == "q") {
        throw error("'q' cannot be declared as a formal symbol");
    }
    names_.push_back(name);
}

sym_exps symbol_context::unit(std::string_view name) const
{
    sym_exps e;
    e.e[slot(name)] = 1;
    return e;
}

const symbol_context &symbol_context::standard()
{
    static const symbol_context ctx{"x", "y", "z"};
    return ctx;
}

coefficient::coefficient(const rational &c)
{
    if (c != 0) {
        terms_.emplace_back(sym_exps{}, c);
    }
}

coefficient coefficient::monomial(const rational &c, const sym_exps &e)
{
    coefficient r;
    if (c != 0) {
        r.terms_.emplace_back(e, c);
    }
    return r;
}

rational coefficient::constant_value() const
{
    if (terms_.empty()) {
        return 0;
    }
    if (!is_constant()) {
        throw error("coefficient " + to_string() + " is not a constant");
    }
    return terms_.front().second;
}

namespace {

// Merges `src` (scaled by sign) into `dst`; both sorted.
void merge_into(std::vector<coefficient::term> &dst, const std::vector<coefficient::term> &src, int sign)
{
    if (src.empty()) {
        return;
    }
    if (dst.size() == 1 && src.size() == 1 && dst.front().first == src.front().first) {
        if (sign > 0) {
            dst.front().second += src.front().second;
        } else {
            dst.front().second -= src.front().second;
        }
        if (dst.front().second == 0) {
            dst.clear();
        }
        return;
    }
    std::vector<coefficient::term> out;
    out.reserve(dst.size() + src.size());
    auto i = dst.begin();
    auto j = src.begin();
    while (i != dst.end() || j != src.end()) {
        if (j == src.end() || (i != dst.end() && i->first < j->first)) {
            out.push_back(std::move(*i++));
        } else if (i == dst.end() || j->first < i->first) {
            out.emplace_back(j->first, sign > 0 ? j->second : rational(-j->second));
            ++j;
        } else {
            rational v = sign > 0 ? rational(i->second + j->second) : rational(i->second - j->second);
            if (v != 0) {
                out.emplace_back(i->first, std::move(v));
            }
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

} // namespace

coefficient &coefficient::operator+=(const coefficient &o)
{
    merge_into(terms_, o.terms_, 1);
    return *this;
}

coefficient &coefficient::operator-=(const coefficient &o)
{
    merge_into(terms_, o.terms_, -1);
    return *this;
}

coefficient &coefficient::operator*=(const rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

void coefficient::add_product(const coefficient &a, const coefficient &b)
{
    if (a.terms_.empty() || b.terms_.empty()) {
        return;
    }
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        add_scaled_monomial(a, b.terms_.front().second, b.terms_.front().first);
        return;
    }
    *this += a * b;
}

void coefficient::add_scaled_monomial(const coefficient &a, const rational &c, const sym_exps &e)
{
    if (c == 0 || a.terms_.empty()) {
        return;
    }
    if (a.terms_.size() == 1) {
        // Hot path: monomial times monomial.
        thread_local rational tmp;
        sym_exps ex = a.terms_.front().first + e;
        mpq_mul(tmp.get_mpq_t(), a.terms_.front().second.get_mpq_t(), c.get_mpq_t());
        if (terms_.size() == 1 && terms_.front().first == ex) {
            terms_.front().second += tmp;
            if (terms_.front().second == 0) {
                terms_.clear();
            }
            return;
        }
        if (terms_.empty()) {
            terms_.emplace_back(ex, tmp);
            return;
        }
        coefficient m;
        m.terms_.emplace_back(ex, tmp);
        *this += m;
        return;
    }
    *this += a.times_monomial(c, e);
}

coefficient coefficient::operator-() const
{
    coefficient r = *this;
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

coefficient operator*(const coefficient &a, const coefficient &b)
{
    coefficient r;
    if (a.terms_.empty() || b.terms_.empty()) {
        return r;
    }
    if (b.terms_.size() == 1) {
        return a.times_monomial(b.terms_.front().second, b.terms_.front().first);
    }
    if (a.terms_.size() == 1) {
        return b.times_monomial(a.terms_.front().second, a.terms_.front().first);
    }
    std::vector<coefficient::term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            prod.emplace_back(ea + eb, ca * cb);
        }
    }
    std::sort(prod.begin(), prod.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    for (auto &t : prod) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first) {
            r.terms_.back().second += t.second;
            if (r.terms_.back().second == 0) {
                r.terms_.pop_back();
            }
        } else {
            r.terms_.push_back(std::move(t));
        }
    }
    return r;
}

coefficient coefficient::inverse() const
{
    if (!is_unit()) {
        throw not_invertible("coefficient " + to_string() + " is not a unit");
    }
    coefficient r;
    r.terms_.emplace_back(-terms_.front().first, 1 / terms_.front().second);
    return r;
}

coefficient coefficient::times_monomial(const rational &c, const sym_exps &e) const
{
    coefficient r;
    if (c == 0) {
        return r;
    }
    r.terms_.reserve(terms_.size());
    for (const auto &[ex, v] : terms_) {
        r.terms_.emplace_back(ex + e, v * c);
    }
    // Shifting by a fixed vector preserves the lexicographic order.
    return r;
}

bool coefficient::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const term &t) { return is_integer(t.second); });
}

bool operator==(const coefficient &a, const coefficient &b)
{
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].first != b.terms_[i].first || a.terms_[i].second != b.terms_[i].second) {
            return false;
        }
    }
    return true;
}

std::string coefficient::to_string(const symbol_context &ctx) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        rational mag = abs(c);
        if (first) {
            if (c < 0) {
                os << '-';
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool any_sym = !e.is_zero();
        bool need_scalar = !any_sym || mag != 1;
        if (need_scalar) {
            os << qv::to_string(mag);
        }
        bool lead = !need_scalar;
        for (std::size_t i = 0; i < max_symbols; ++i) {
            if (e.e[i] == 0) {
                continue;
            }
            if (!lead) {
                os << '*';
            }
            lead = false;
            os << (i < ctx.names().size() ? ctx.names()[i] : "s" + std::to_string(i));
            if (e.e[i] != 1) {
                os << '^' << e.e[i];
            }
        }
    }
    return os.str();
}

} // namespace qv
