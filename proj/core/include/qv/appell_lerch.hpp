#pragma once

#include <cstdint>

#include <qv/bilateral.hpp>
#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// sum_{n in Z} (-1)^{l n} q^{l n (n+1) / 2} b^n / (1 - a q^n): the level-l Appell
// function without its a^{l/2} prefactor.
series appell_unnormalized(std::int64_t level, const monomial &a, const monomial &b, const rational &order,
                           const bilateral_options &opts = {});

// The numerator sum of m(x, q^m, z): sum_r (-1)^r q^{m C(r,2)} z^r / (1 - q^{m(r-1)} x z).
series m_numerator(const monomial &x, const rational &m, const monomial &z, const rational &order,
                   const bilateral_options &opts = {});

// Appell-Lerch sum m(x, q^m, z).
series m_sum(const monomial &x, const rational &m, const monomial &z, const rational &order);

// Delta(x, q^m, z1, z0) = z0 J_1^3 j(z1/z0) j(x z0 z1) / (j(z0) j(z1) j(x z0) j(x z1)), all at base q^m;
// the correction in m(x, q, z1) = m(x, q, z0) + Delta(x, q, z1, z0).
series delta_correction(const monomial &x, const rational &m, const monomial &z1, const monomial &z0,
                        const rational &order);

} // namespace qv
