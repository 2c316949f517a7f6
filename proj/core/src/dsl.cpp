#include <qv/dsl.hpp>

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include <qv/appell_lerch.hpp>
#include <qv/bailey.hpp>
#include <qv/catalog.hpp>
#include <qv/errors.hpp>
#include <qv/indefinite_theta.hpp>
#include <qv/monomial.hpp>
#include <qv/precision.hpp>
#include <qv/products.hpp>

namespace qv::dsl {

namespace {

node_ptr make(op kind, std::vector<node_ptr> args = {})
{
    auto n = std::make_shared<node>();
    n->kind = kind;
    n->args = std::move(args);
    return n;
}

node_ptr number(const rational &v)
{
    auto n = std::make_shared<node>();
    n->kind = op::number;
    n->value = v;
    return n;
}

bool is_number(const node_ptr &n)
{
    return n->kind == op::number;
}

rational int_power(const rational &base, std::int64_t k)
{
    rational r = 1;
    rational b = k < 0 ? rational(1 / base) : base;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
        r *= b;
    }
    return r;
}

bool is_keyword(std::string_view name)
{
    if (name == "inf") {
        return true;
    }
    auto pairs = builtin_pair_names();
    return std::find(pairs.begin(), pairs.end(), name) != pairs.end();
}

class parser {
public:
    parser(std::string_view text, const symbol_context &ctx) : text_(text), ctx_(ctx) {}

    node_ptr run()
    {
        node_ptr e = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
    }

private:
    std::string_view text_;
    const symbol_context &ctx_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string &what) const
    {
        throw parse_error(what, pos_);
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t signed_int()
    {
        bool negative = accept('-');
        std::string d = digits();
        if (d.size() > 15) {
            fail("integer too large");
        }
        std::int64_t v = std::stoll(d);
        return negative ? -v : v;
    }

    std::string identifier()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size()
               && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    node_ptr fold(node_ptr n)
    {
        if (n->args.empty() || !std::all_of(n->args.begin(), n->args.end(), is_number)) {
            return n;
        }
        const auto &a = n->args;
        switch (n->kind) {
        case op::neg:
            return number(-a[0]->value);
        case op::add:
            return number(a[0]->value + a[1]->value);
        case op::sub:
            return number(a[0]->value - a[1]->value);
        case op::mul:
            return number(a[0]->value * a[1]->value);
        case op::div:
            if (a[1]->value == 0) {
                fail("division by zero");
            }
            return number(a[0]->value / a[1]->value);
        case op::pow:
            if (a[0]->value == 0 && n->exponent < 0) {
                fail("division by zero");
            }
            return number(int_power(a[0]->value, n->exponent));
        default:
            return n;
        }
    }

    node_ptr binary(op kind, node_ptr l, node_ptr r)
    {
        return fold(make(kind, {std::move(l), std::move(r)}));
    }

    node_ptr expr()
    {
        node_ptr l = term();
        for (;;) {
            if (accept('+')) {
                l = binary(op::add, l, term());
            } else if (accept('-')) {
                l = binary(op::sub, l, term());
            } else {
                return l;
            }
        }
    }

    node_ptr term()
    {
        node_ptr l = factor();
        for (;;) {
            if (accept('*')) {
                l = binary(op::mul, l, factor());
            } else if (accept('/')) {
                l = binary(op::div, l, factor());
            } else {
                return l;
            }
        }
    }

    node_ptr factor()
    {
        if (accept('-')) {
            return fold(make(op::neg, {factor()}));
        }
        skip_ws();
        std::size_t start = pos_;
        node_ptr a = atom();
        bool bare_q = a->kind == op::q_power && text_[start] == 'q';
        if (!bare_q && accept('^')) {
            auto p = std::make_shared<node>();
            p->kind = op::pow;
            p->args = {a};
            p->exponent = signed_int();
            return fold(p);
        }
        return a;
    }

    rational q_exponent()
    {
        if (accept('(')) {
            std::int64_t num = signed_int();
            std::int64_t den = 1;
            if (accept('/')) {
                den = signed_int();
                if (den == 0) {
                    fail("zero denominator");
                }
            }
            expect(')');
            return make_rational(static_cast<long>(num), static_cast<long>(den));
        }
        return rational(static_cast<long>(signed_int()));
    }

    node_ptr atom()
    {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return number(parse_rational(digits()));
        }
        if (accept('(')) {
            node_ptr e = expr();
            expect(')');
            return e;
        }
        if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        std::size_t start = pos_;
        std::string name = identifier();
        if (name == "q" && !peek('(')) {
            auto n = std::make_shared<node>();
            n->kind = op::q_power;
            n->value = 1;
            if (accept('^')) {
                n->value = q_exponent();
            }
            return n;
        }
        if (peek('(')) {
            if (!is_function(name)) {
                throw unknown_function("unknown function '" + name + "' at position " + std::to_string(start));
            }
            expect('(');
            auto n = std::make_shared<node>();
            n->kind = op::call;
            n->name = name;
            if (!accept(')')) {
                n->args.push_back(expr());
                while (accept(',') || accept(';')) {
                    n->args.push_back(expr());
                }
                expect(')');
            }
            return n;
        }
        auto n = std::make_shared<node>();
        n->name = name;
        if (ctx_.declared(name)) {
            n->kind = op::symbol;
        } else if (is_keyword(name)) {
            n->kind = op::ident;
        } else {
            throw undeclared_symbol("undeclared symbol '" + name + "' at position " + std::to_string(start));
        }
        return n;
    }
};

// ---- printing ----

int precedence(const node_ptr &e)
{
    switch (e->kind) {
    case op::number:
        return e->value < 0 && is_integer(e->value) ? 3 : 5;
    case op::add:
    case op::sub:
        return 1;
    case op::mul:
    case op::div:
        return 2;
    case op::neg:
        return 3;
    case op::pow:
        return 4;
    default:
        return 5;
    }
}

std::string wrap(const node_ptr &e, bool parens)
{
    std::string s = print(e);
    return parens ? "(" + s + ")" : s;
}

// ---- evaluation ----

struct eval_context {
    const symbol_context &symbols;
};

series ev(const node_ptr &e, const rational &N, const eval_context &ctx);

// Folds monomial-valued subtrees; nullopt when e is not a monomial.
std::optional<monomial> as_param(const node_ptr &e, const eval_context &ctx)
{
    switch (e->kind) {
    case op::number:
        if (e->value == 0) {
            return std::nullopt;
        }
        return monomial(e->value);
    case op::q_power:
        return monomial::q(e->value);
    case op::symbol:
        return monomial(1, 0, ctx.symbols.unit(e->name));
    case op::neg: {
        auto a = as_param(e->args[0], ctx);
        return a ? std::optional<monomial>(-*a) : std::nullopt;
    }
    case op::mul:
    case op::div: {
        auto a = as_param(e->args[0], ctx);
        auto b = as_param(e->args[1], ctx);
        if (!a || !b) {
            return std::nullopt;
        }
        return e->kind == op::mul ? *a * *b : *a / *b;
    }
    case op::pow: {
        auto a = as_param(e->args[0], ctx);
        return a ? std::optional<monomial>(a->pow(e->exponent)) : std::nullopt;
    }
    default:
        return std::nullopt;
    }
}

struct call_args {
    const node &call;
    const eval_context &ctx;

    std::size_t size() const
    {
        return call.args.size();
    }

    [[noreturn]] void bad(std::size_t i, const std::string &what) const
    {
        throw error(call.name + ": argument " + std::to_string(i + 1) + " " + what);
    }

    monomial mono(std::size_t i) const
    {
        auto m = as_param(call.args.at(i), ctx);
        if (!m) {
            bad(i, "must be a monomial");
        }
        return *m;
    }

    rho_spec extended(std::size_t i) const
    {
        const auto &a = call.args.at(i);
        if (a->kind == op::ident && a->name == "inf") {
            return rho_spec::infinity();
        }
        return rho_spec(mono(i));
    }

    rational scalar(std::size_t i) const
    {
        monomial m = mono(i);
        if (m.q_exp() != 0 || m.has_symbols()) {
            bad(i, "must be a number");
        }
        return m.scalar();
    }

    std::int64_t integer(std::size_t i) const
    {
        rational r = scalar(i);
        if (!is_integer(r)) {
            bad(i, "must be an integer");
        }
        return to_int64(r.get_num());
    }

    rational modulus(std::size_t i) const
    {
        rational r = scalar(i);
        if (r <= 0) {
            bad(i, "must be a positive modulus");
        }
        return r;
    }

    std::string pair(std::size_t i) const
    {
        const auto &a = call.args.at(i);
        if (a->kind != op::ident || a->name == "inf") {
            bad(i, "must name a Bailey pair");
        }
        return a->name;
    }

    series value(std::size_t i, const rational &N) const
    {
        return ev(call.args.at(i), N, ctx);
    }
};

using handler = std::function<series(const call_args &, const rational &)>;

struct function_def {
    std::size_t min_args;
    std::size_t max_args;
    handler fn;
};

bailey_pair pair_arg(const call_args &a, std::size_t base_index)
{
    rational base = a.size() > base_index ? a.modulus(base_index) : rational(1);
    return builtin_pair(a.pair(0), base);
}

std::pair<series, series> limit_sides(const call_args &a, const rational &N)
{
    bailey_pair p = pair_arg(a, 1);
    rho_spec r1 = a.size() > 2 ? a.extended(2) : rho_spec::infinity();
    rho_spec r2 = a.size() > 3 ? a.extended(3) : rho_spec::infinity();
    return limit_identity(p, r1, r2, N);
}

const std::map<std::string, function_def> &builtins()
{
    static const std::map<std::string, function_def> table = {
        {"pinf",
         {2, 8,
          [](const call_args &a, const rational &N) {
              rational m = a.modulus(a.size() - 1);
              series s = series::constant(1);
              for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                  s = s * poch_infinite(a.mono(i), m, N);
              }
              return s;
          }}},
        {"pinf2",
         {3, 3,
          [](const call_args &a, const rational &N) {
              rational m = a.modulus(2);
              return poch_infinite(a.mono(0), m, N) * poch_infinite(a.mono(1), m, N);
          }}},
        {"pfin",
         {3, 3,
          [](const call_args &a, const rational &) {
              std::int64_t n = a.integer(2);
              if (n < 0) {
                  a.bad(2, "must be nonnegative");
              }
              return poch_finite(a.mono(0), a.modulus(1), n);
          }}},
        {"j", {2, 2, [](const call_args &a, const rational &N) { return j_theta(a.mono(0), a.modulus(1), N); }}},
        {"J",
         {1, 2,
          [](const call_args &a, const rational &N) {
              if (a.size() == 1) {
                  return J(a.modulus(0), N);
              }
              return J(a.scalar(0), a.modulus(1), N);
          }}},
        {"Jb", {2, 2, [](const call_args &a, const rational &N) { return Jbar(a.scalar(0), a.modulus(1), N); }}},
        {"m",
         {3, 3,
          [](const call_args &a, const rational &N) { return m_sum(a.mono(0), a.modulus(1), a.mono(2), N); }}},
        {"delta",
         {4, 4,
          [](const call_args &a, const rational &N) {
              return delta_correction(a.mono(0), a.modulus(1), a.mono(2), a.mono(3), N);
          }}},
        {"A",
         {3, 3,
          [](const call_args &a, const rational &N) {
              std::int64_t level = a.integer(0);
              if (level < 1) {
                  a.bad(0, "must be a positive level");
              }
              return appell_unnormalized(level, a.mono(1), a.mono(2), N);
          }}},
        {"f",
         {5, 6,
          [](const call_args &a, const rational &N) {
              quad_form form{a.integer(0), a.integer(1), a.integer(2)};
              rational base = a.size() > 5 ? a.modulus(5) : rational(1);
              return f_indef(form, a.mono(3), a.mono(4), N, base);
          }}},
        {"g",
         {7, 7,
          [](const call_args &a, const rational &N) {
              quad_form form{a.integer(0), a.integer(1), a.integer(2)};
              return g_hm(form, a.mono(3), a.mono(4), a.mono(5), a.mono(6), N);
          }}},
        {"theta_np",
         {4, 4,
          [](const call_args &a, const rational &N) {
              return theta_hm(a.integer(0), a.integer(1), a.mono(2), a.mono(3), N);
          }}},
        {"sub",
         {3, 3,
          [](const call_args &a, const rational &N) {
              std::int64_t sign = a.integer(1);
              std::int64_t k = a.integer(2);
              if ((sign != 1 && sign != -1) || k < 1) {
                  a.bad(1, "and 3 must be a sign and a positive integer");
              }
              rational inner = N / rational(static_cast<long>(k));
              return substitute(a.value(0, inner), static_cast<int>(sign), k);
          }}},
        {"BL", {1, 4, [](const call_args &a, const rational &N) { return limit_sides(a, N).first; }}},
        {"BR", {1, 4, [](const call_args &a, const rational &N) { return limit_sides(a, N).second; }}},
        {"PF_L",
         {1, 2, [](const call_args &a, const rational &N) { return partial_theta_fine(pair_arg(a, 1), N).first; }}},
        {"PF_R",
         {1, 2, [](const call_args &a, const rational &N) { return partial_theta_fine(pair_arg(a, 1), N).second; }}},
        {"PB_L",
         {1, 2, [](const call_args &a, const rational &N) { return partial_theta_basic(pair_arg(a, 1), N).first; }}},
        {"PB_R",
         {1, 2,
          [](const call_args &a, const rational &N) { return partial_theta_basic(pair_arg(a, 1), N).second; }}},
    };
    return table;
}

series eval_call(const node &call, const rational &N, const eval_context &ctx)
{
    call_args args{call, ctx};
    auto it = builtins().find(call.name);
    if (it != builtins().end()) {
        const function_def &def = it->second;
        if (args.size() < def.min_args || args.size() > def.max_args) {
            throw error(call.name + ": wrong number of arguments");
        }
        return def.fn(args, N);
    }
    const catalog_entry &entry = find_entry(call.name);
    if (args.size() != entry.params.size()) {
        throw error(call.name + ": expects " + std::to_string(entry.params.size()) + " argument(s)");
    }
    catalog_args values;
    for (std::size_t i = 0; i < args.size(); ++i) {
        switch (entry.params[i].kind) {
        case param_kind::integer:
            values.emplace_back(monomial(rational(static_cast<long>(args.integer(i)))));
            break;
        case param_kind::monomial:
            values.emplace_back(args.mono(i));
            break;
        case param_kind::extended:
            values.push_back(args.extended(i));
            break;
        }
    }
    return eval_named(call.name, values, N);
}

series ev(const node_ptr &e, const rational &N, const eval_context &ctx)
{
    if (auto m = as_param(e, ctx)) {
        return m->to_series();
    }
    switch (e->kind) {
    case op::number:
        return series::constant(e->value);
    case op::ident:
        throw error("'" + e->name + "' is only meaningful as a function argument");
    case op::call:
        return eval_call(*e, N, ctx);
    case op::neg:
        return -ev(e->args[0], N, ctx);
    case op::add:
        return ev(e->args[0], N, ctx) + ev(e->args[1], N, ctx);
    case op::sub:
        return ev(e->args[0], N, ctx) - ev(e->args[1], N, ctx);
    case op::mul:
        return at_order(N, [&](const rational &W) { return ev(e->args[0], W, ctx) * ev(e->args[1], W, ctx); });
    case op::div:
        return at_order(N, [&](const rational &W) {
            return ev(e->args[0], W, ctx) * invert(ev(e->args[1], W, ctx), W);
        });
    case op::pow:
        return at_order(N, [&](const rational &W) {
            series base = ev(e->args[0], W, ctx);
            std::int64_t k = e->exponent < 0 ? -e->exponent : e->exponent;
            series r = series::constant(1);
            for (std::int64_t i = 0; i < k; ++i) {
                r = r * base;
            }
            return e->exponent < 0 ? invert(r, W) : r;
        });
    default:
        throw error("cannot evaluate expression");
    }
}

} // namespace

node_ptr parse_expr(std::string_view text, const symbol_context &ctx)
{
    return parser(text, ctx).run();
}

std::string print(const node_ptr &e)
{
    switch (e->kind) {
    case op::number:
        if (is_integer(e->value)) {
            return to_string(e->value);
        }
        return "(" + to_string(e->value) + ")";
    case op::q_power:
        if (e->value == 1) {
            return "q";
        }
        if (is_integer(e->value)) {
            return "q^" + to_string(e->value);
        }
        return "q^(" + to_string(e->value) + ")";
    case op::symbol:
    case op::ident:
        return e->name;
    case op::call: {
        std::string s = e->name + "(";
        for (std::size_t i = 0; i < e->args.size(); ++i) {
            s += (i ? ", " : "") + print(e->args[i]);
        }
        return s + ")";
    }
    case op::neg:
        return "-" + wrap(e->args[0], precedence(e->args[0]) < 3);
    case op::pow:
        return wrap(e->args[0], precedence(e->args[0]) < 5 || e->args[0]->kind == op::q_power) + "^" + std::to_string(e->exponent);
    default:
        break;
    }
    int p = precedence(e);
    const char *sym = e->kind == op::add ? " + " : e->kind == op::sub ? " - " : e->kind == op::mul ? "*" : "/";
    return wrap(e->args[0], precedence(e->args[0]) < p) + sym + wrap(e->args[1], precedence(e->args[1]) <= p);
}

bool same(const node_ptr &a, const node_ptr &b)
{
    if (a->kind != b->kind || a->value != b->value || a->name != b->name || a->exponent != b->exponent
        || a->args.size() != b->args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!same(a->args[i], b->args[i])) {
            return false;
        }
    }
    return true;
}

series evaluate(const node_ptr &e, const rational &order, const symbol_context &ctx)
{
    eval_context c{ctx};
    return ev(e, order, c).truncated(order);
}

bool is_function(std::string_view name)
{
    return builtins().count(std::string(name)) > 0 || has_entry(std::string(name));
}

std::vector<std::string> function_names()
{
    std::vector<std::string> out;
    for (const auto &[name, def] : builtins()) {
        out.push_back(name);
    }
    for (const auto &e : list_entries()) {
        out.push_back(e.name);
    }
    return out;
}

} // namespace qv::dsl
