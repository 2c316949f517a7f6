#pragma once

#include <cstdint>

#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// Exponent law E(r, s) = a C(r,2) + b r s + c C(s,2).
struct quad_form {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    rational exponent(std::int64_t r, std::int64_t s) const
    {
        return rational(static_cast<long>(a * choose2(r) + b * r * s + c * choose2(s)));
    }
};

// f_{a,b,c}(x, y, q^base) = (sum_{r,s>=0} - sum_{r,s<0}) (-1)^{r+s} x^r y^s q^{base E(r,s)}.
// Summed by antidiagonals r + s = t with a lower bound on each diagonal's
// valuation; x and y may carry formal symbols.
series f_indef(const quad_form &form, const monomial &x, const monomial &y, const rational &order,
               const rational &base = 1);

// g_{a,b,c}(x, y, q, z1, z0): the Appell-Lerch part of the decomposition.
// Requires b^2 > a c.
series g_hm(const quad_form &form, const monomial &x, const monomial &y, const monomial &z1, const monomial &z0,
            const rational &order);

// theta_{n,p}(x, y, q): the theta-quotient part of the decomposition of f_{n,n+p,n}.
series theta_hm(std::int64_t n, std::int64_t p, const monomial &x, const monomial &y, const rational &order);

// f_{n,n+p,n}(x,y,q) - g_{n,n+p,n}(x,y,q,-1,-1) - theta_{n,p}(x,y,q); zero for generic x, y.
series hm_residual(std::int64_t n, std::int64_t p, const monomial &x, const monomial &y, const rational &order);

// Compares f_{n,n+p,n} against g + theta below order.
equality_report hm_check(std::int64_t n, std::int64_t p, const monomial &x, const monomial &y, const rational &order);

} // namespace qv
