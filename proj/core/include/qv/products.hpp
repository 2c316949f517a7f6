#pragma once

#include <cstdint>
#include <optional>

#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// (a; q^m)_n = prod_{k=0}^{n-1} (1 - a q^{k m}), exact.
series poch_finite(const monomial &a, const rational &m, std::int64_t n);

// Same product with every coefficient of exponent >= order dropped.
series poch_finite(const monomial &a, const rational &m, std::int64_t n, const rational &order);

// (a; q^m)_inf truncated at order. Throws divergent_product when a has a negative q-exponent.
series poch_infinite(const monomial &a, const rational &m, const rational &order);

// j(x, q^m) = (q^m, x, q^m/x; q^m)_inf. Arguments outside the strip 0 <= e < m are
// shifted back with j(q^{nm} x, q^m) = (-1)^n q^{-m C(n,2)} x^{-n} j(x, q^m).
series j_theta(const monomial &x, const rational &m, const rational &order);

// J_{a,m} = j(q^a, q^m)
series J(const rational &a, const rational &m, const rational &order);

// Jbar_{a,m} = j(-q^a, q^m)
series Jbar(const rational &a, const rational &m, const rational &order);

// J_m = J_{m,3m} = (q^m; q^m)_inf
series J(const rational &m, const rational &order);

void clear_product_caches();

} // namespace qv
