#include <qv/monomial.hpp>

#include <qv/errors.hpp>

namespace qv {

monomial::monomial(const rational &scalar, const rational &q_exp, const sym_exps &syms)
    : scalar_(scalar), q_exp_(q_exp), syms_(syms)
{
    if (scalar_ == 0) {
        throw std::invalid_argument("monomial scalar must be nonzero");
    }
}

monomial monomial::q(const rational &e)
{
    return monomial(1, e);
}

bool monomial::is_one() const
{
    return scalar_ == 1 && q_exp_ == 0 && syms_.is_zero();
}

monomial monomial::inverse() const
{
    return monomial(1 / scalar_, -q_exp_, -syms_);
}

monomial monomial::pow(std::int64_t k) const
{
    rational s = 1;
    rational base = k >= 0 ? scalar_ : rational(1 / scalar_);
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) {
        s *= base;
    }
    return monomial(s, q_exp_ * rational(static_cast<long>(k)), syms_.scaled(k));
}

monomial operator*(const monomial &a, const monomial &b)
{
    return monomial(a.scalar_ * b.scalar_, a.q_exp_ + b.q_exp_, a.syms_ + b.syms_);
}

bool operator==(const monomial &a, const monomial &b)
{
    return a.scalar_ == b.scalar_ && a.q_exp_ == b.q_exp_ && a.syms_ == b.syms_;
}

bool operator<(const monomial &a, const monomial &b)
{
    if (a.q_exp_ != b.q_exp_) {
        return a.q_exp_ < b.q_exp_;
    }
    if (a.scalar_ != b.scalar_) {
        return a.scalar_ < b.scalar_;
    }
    return a.syms_ < b.syms_;
}

series monomial::to_series() const
{
    return series::q_power(q_exp_, coeff());
}

std::string monomial::to_string(const symbol_context &ctx) const
{
    return to_series().to_string(ctx);
}

monomial as_monomial(const series &s)
{
    if (!s.is_exact() || s.terms().size() != 1 || !s.terms().front().second.is_unit()) {
        throw error("expected a monomial argument, got " + s.to_string());
    }
    const auto &[e, c] = s.terms().front();
    const auto &[ex, scalar] = c.terms().front();
    return monomial(scalar, make_rational(static_cast<long>(e), static_cast<long>(s.den())), ex);
}

} // namespace qv
