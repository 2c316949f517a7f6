#include <qv/registry.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <qv/errors.hpp>

namespace qv {

namespace {

std::string trim(std::string_view s)
{
    auto not_space = [](unsigned char c) { return !std::isspace(c); };
    auto b = std::find_if(s.begin(), s.end(), not_space);
    auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string(b, e) : std::string();
}

std::vector<std::string> split_list(std::string_view s)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(s)};
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

bool valid_name(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.';
    });
}

std::string b1k_records()
{
    std::string out;
    for (int k = 1; k <= 3; ++k) {
        const std::string K = std::to_string(k);
        const std::string M = std::to_string(2 * k + 1);
        out += "b1k-bilateral-k" + K + " #b1k,indefinite : B(" + K + ") == 2/pinf(q,1)*A(" + M + ",-1,q^-" + K
               + ")\n";
        std::string sum = (k % 2 ? "-" : "") + std::string("pinf(q^") + M + "," + M + ")^2/(2*pinf(-q^" + M + ","
                          + M + ")^2)";
        for (int i = 1; i <= 2 * k + 1; ++i) {
            if (i == k + 1) {
                continue;
            }
            sum += (i % 2 ? " + " : " - ");
            sum += "j(q^" + std::to_string(k + i) + "," + M + ")*m(-q^" + std::to_string(k - i + 1) + "," + M
                   + ",q^" + std::to_string(k + i) + ")";
        }
        out += "b1k-jm-k" + K + " #b1k,appell-lerch : B(" + K + ") == 2/pinf(q,1)*(" + sum + ")\n";
    }
    return out;
}

struct m_triple {
    const char *x;
    const char *z;
    const char *z0;
};

std::string m_prop_records()
{
    static const m_triple grid[] = {
        {"-q", "q^2", "q^4"},    {"-q^2", "q^4", "q^3"},  {"-q", "q^4", "q^2"},        {"-q^2", "q^3", "q"},
        {"q", "-q^2", "q^3"},    {"2*q", "q^3", "-q"},    {"-q^3", "q", "q^2"},        {"-1", "q^2", "-q^3"},
        {"(1/2)*q^2", "-q", "q^4"},
    };
    std::string out;
    int i = 1;
    for (const auto &t : grid) {
        const std::string x = t.x, z = t.z, z0 = t.z0;
        const std::string tag = " #m-props : ";
        const std::string id = "m-props-" + std::to_string(i++);
        out += id + "-m1" + tag + "m(" + x + ",5," + z + ") == (" + x + ")^-1*m((" + x + ")^-1,5,(" + z + ")^-1)\n";
        out += id + "-m1.5" + tag + "m(" + x + ",5," + z + ") == m(" + x + ",5,q^5*" + z + ")\n";
        out += id + "-m2" + tag + "m(" + x + ",5," + z + ") == m(" + x + ",5," + z0 + ") + delta(" + x + ",5," + z
               + "," + z0 + ")\n";
    }
    return out;
}

std::string hm_records()
{
    std::string out;
    const int np[][2] = {{1, 1}, {2, 1}, {3, 1}, {1, 2}, {3, 2}};
    for (const auto &[n, p] : np) {
        const std::string N = std::to_string(n), P = std::to_string(p), B = std::to_string(n + p);
        out += "hm-" + N + "-" + P + " @40 #hm,indefinite : f(" + N + "," + B + "," + N + ",-q^2,-q^3) == g(" + N
               + "," + B + "," + N + ",-q^2,-q^3,-1,-1) + theta_np(" + N + "," + P + ",-q^2,-q^3)\n";
    }
    return out;
}

const char *fixed_records = R"(# Theorem 1.1
thm-main @100 #theorem-main : B(2) + 2/pinf2(q^2,q^3;5)*chi10() - 2/pinf2(q,q^4;5)*X10() == -pinf(q,1)/pinf(-q,1)^2

fofq #appell : f3() == 2/pinf(q,1)*A(3,-1,q^-1)
B1-f @60 #anchor : B(1) == f3()
M1-phi @60 #anchor : M(1) == phi10()
Mk-k1 #indefinite : M(1) == pinf(-q,1)/pinf(q,1)*f(2,3,2,q^2,q^2)
Mk-k2 #indefinite : M(2) == pinf(-q,1)/pinf(q,1)*f(4,5,4,q^4,q^4)

# Bailey pairs and the Bailey lemma
f1-limit @60 #bailey : f1() == f1_hecke()/pinf(q,1)
f1-bailey @60 #bailey : f1() == BR(fifth_order)
f1-indef #indefinite : f1() == (f(3,7,3,q^3,q^3) + q^4*f(3,7,3,q^8,q^8))/pinf(q,1)
J1-limit @60 #bailey : J1gf() == pinf(-q,2)/pinf(q^2,2)*J1_hecke()
J1-bailey @60 #bailey : J1gf() == pinf(-q,2)*BR(early_conditions,2)
J1-indef #indefinite : J1gf() == pinf(-q,2)/pinf(q^2,2)*(f(5,11,5,q^12,q^16,4) + q^20*f(5,11,5,q^44,q^48,4) + q^6*f(5,11,5,q^28,q^32,4) + q^42*f(5,11,5,q^60,q^64,4))
V-f321 #partial-theta,indefinite : V(z) == f(3,2,1,q^3,z*q)/pinf(q,1)
V-bailey #partial-theta,bailey : V(z) == PF_R(unit_z)
W-f121 #partial-theta,indefinite : W(z) == f(1,2,1,q,z*q)/pinf(q,1)^2
W-bailey #partial-theta,bailey : W(z) == PB_R(unit_z)
Y-f146 #partial-theta,indefinite : Y() == f(1,4,6,q,q^4)/pinf(q,1)^2
Y-bailey #partial-theta,bailey : Y() == PB_R(slater_L6)
hikami #partial-theta,indefinite : hikami() == f(3,2,1,q^6,q^3,2)/(pinf(q,1)*pinf(q,2))

# Transformations
S-transform #transform : S(x) == pinf(x*q,q/x;1)/pinf(q,1)*S_mock(x)
sspec-a #transform : S_negomega() == sspec_sum()
sspec-b #transform : sspec_sum() == pinf(-q^3,3)/pinf(q^2,2)*chi3()
gleissberg #transform : gleissberg(y) == gleissberg_rhs(y)/pinf(q,1)
T1-def #transform,appell : T1() == 2*pinf(-q,1)^2/pinf(q,1)^2*sub(A(3,-1,q^-1),1,2)
T1-mixed @60 #transform,anchor : T1() == pinf(-q,1)^3*sub(f3(),1,2)/pinf(q,1)
T1-bt #transform : bt_lhs(1,inf,-1,-1) == T1()
T2-def #transform,appell : T2() == 2*pinf(-q^2,2)/pinf(q^2,2)*sub(A(2,-1,-q^(-1/2)),1,2)
mu-lerch #appell : mu() == 2*pinf(q,2)/pinf(q^2,2)*sub(A(2,-1,q^(-1/2)),1,2)
T2-mixed @60 #transform,anchor : T2() == pinf(-q^2,2)*sub(mu(),-1,1)/pinf(-q,2)
btbis-T2 #transform : btbis_lhs(1,-1,-1,inf) == T2()
bt-spec #transform : bt_lhs(q,-q,-1,-q) == bt_rhs(q,-q,-1,-q)
btbis-spec #transform : btbis_lhs(1,-1,-1,inf) == btbis_rhs(1,-1,-1,inf)
ww-spec #transform : ww_lhs(q,-1,-q,-1,-q) == ww_rhs(q,-1,-q,-1,-q)
3t-q-q #transform,appell : lhs3t(q,q) == pinf(-q,1)/pinf(q,-1,1)*A(1,-q,-q) - tail3t(q,q)
3t-2-3 #transform,appell : lhs3t(2,3) == pinf(-2,1)/pinf(q,-q/3,1)*A(1,-2,-3) - tail3t(2,3)
3t-q-half #transform,appell : lhs3t(q,1/2) == pinf(-q,1)/pinf(q,-2*q,1)*A(1,-q,-1/2) - tail3t(q,1/2)
3t-third-q #transform,appell : lhs3t(1/3,q) == pinf(-1/3,1)/pinf(q,-1,1)*A(1,-1/3,-q) - tail3t(1/3,q)
3tspec-x-1 #transform,appell : U(-1) == 1 + 2/pinf(q,1)*A(1,-1,-1) - S_mock(-1)
3tspec-x-q #transform,appell : U(-q) == 1 + (1+q)/pinf(q,1)*A(1,-q,-q^-1) - S_mock(-q)
3tspec-x-q2 #transform,appell : U(-q^2) == 1 + (1+q^2)/pinf(q,1)*A(1,-q^2,-q^-2) - S_mock(-q^2)

# Proof of Theorem 1.1
X-445 #proof,appell-lerch : X10() == 2*m(-q^2,5,q^4) - J(3,10)*J(5,10)/J(1,5)
chi-446 #proof,appell-lerch : chi10() == 2*m(-q,5,q^2) + q*J(1,10)*J(5,10)/J(2,5)
XmDelta #proof,appell-lerch : X10() == 2*m(-q^2,5,q^3) + 2*delta(-q^2,5,q^4,q^3) - J(3,10)*J(5,10)/J(1,5)
chimDelta #proof,appell-lerch : chi10() == 2*m(-q,5,q^4) + 2*delta(-q,5,q^2,q^4) + q*J(1,10)*J(5,10)/J(2,5)
B12sum #proof,appell-lerch : B(2) == 4/pinf(q,1)*(-j(q,5)*m(-q,5,q^4) + j(q^2,5)*m(-q^2,5,q^3) + pinf(q^5,5)^2/pinf(-1,5)^2)
final-modular @100 #proof : 2*q*j(q,5)*J(1,10)*J(5,10)/(pinf(q,1)*J(2,5)) + 4*j(q,5)*delta(-q,5,q^2,q^4)/pinf(q,1) + 2*j(q^2,5)*J(3,10)*J(5,10)/(pinf(q,1)*J(1,5)) - 4*j(q^2,5)*delta(-q^2,5,q^4,q^3)/pinf(q,1) + pinf(q^5,5)^2/(pinf(-q^5,5)^2*pinf(q,1)) == -pinf(q,1)/pinf(-q,1)^2

# Oracles
euler-pentagonal @60 #oracle : pinf(q,1) == pent()
jacobi-triple-product-x @60 #oracle : j(x,3) == jtp(x,3)
jacobi-triple-product-q2 @60 #oracle : j(-q^2,5) == jtp(-q^2,5)
)";

} // namespace

bool identity_spec::has_tag(std::string_view tag) const
{
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::string identity_spec::to_record() const
{
    std::string s = name + " @" + to_string(order);
    for (std::size_t i = 0; i < tags.size(); ++i) {
        s += (i ? "," : " #") + tags[i];
    }
    return s + " : " + dsl::print(lhs) + " == " + dsl::print(rhs);
}

std::vector<identity_spec> parse_suite(std::string_view text, const std::string &source)
{
    std::vector<identity_spec> out;
    auto symbols = std::make_shared<const symbol_context>(symbol_context::standard());
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string where = source + ":" + std::to_string(line_no) + ": ";
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (line[0] == '%') {
            std::istringstream d(line.substr(1));
            std::string directive;
            d >> directive;
            if (directive != "symbols") {
                throw error(where + "unknown directive '%" + directive + "'");
            }
            std::string rest;
            std::getline(d, rest);
            symbol_context ctx;
            try {
                for (const auto &name : split_list(rest)) {
                    ctx.declare(name);
                }
            } catch (const error &e) {
                throw error(where + e.what());
            }
            symbols = std::make_shared<const symbol_context>(std::move(ctx));
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw error(where + "expected 'name : lhs == rhs'");
        }
        identity_spec spec;
        spec.symbols = symbols;
        std::istringstream head(line.substr(0, colon));
        std::string word;
        while (head >> word) {
            if (word[0] == '@') {
                try {
                    spec.order = parse_rational(word.substr(1));
                } catch (const std::exception &) {
                    throw error(where + "bad order '" + word + "'");
                }
                if (spec.order <= 0) {
                    throw error(where + "order must be positive");
                }
            } else if (word[0] == '#') {
                for (auto &t : split_list(word.substr(1))) {
                    spec.tags.push_back(t);
                }
            } else if (spec.name.empty() && valid_name(word)) {
                spec.name = word;
            } else {
                throw error(where + "unexpected '" + word + "' in record header");
            }
        }
        if (spec.name.empty()) {
            throw error(where + "missing identity name");
        }
        if (std::any_of(out.begin(), out.end(), [&](const identity_spec &o) { return o.name == spec.name; })) {
            throw error(where + "duplicate identity name '" + spec.name + "'");
        }
        std::string body = line.substr(colon + 1);
        auto eq = body.find("==");
        if (eq == std::string::npos || body.find("==", eq + 2) != std::string::npos) {
            throw error(where + "expected exactly one '=='");
        }
        try {
            spec.lhs = dsl::parse_expr(body.substr(0, eq), *symbols);
            spec.rhs = dsl::parse_expr(body.substr(eq + 2), *symbols);
        } catch (const error &e) {
            throw error(where + spec.name + ": " + e.what());
        }
        out.push_back(std::move(spec));
    }
    return out;
}

std::vector<identity_spec> load_suite_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error("cannot open suite file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_suite(buf.str(), path);
}

const std::string &builtin_suite_text()
{
    static const std::string text = std::string(fixed_records) + "\n# (b1k)\n" + b1k_records()
                                    + "\n# Appell-Lerch properties at base q^5\n" + m_prop_records()
                                    + "\n# Hickerson-Mortenson decomposition\n" + hm_records();
    return text;
}

const std::vector<identity_spec> &builtin_identities()
{
    static const std::vector<identity_spec> ids = parse_suite(builtin_suite_text(), "<builtin>");
    return ids;
}

} // namespace qv
