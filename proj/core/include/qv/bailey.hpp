#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

// A parameter rho of the Bailey lemma: a monomial or the limit rho -> infinity.
class rho_spec {
public:
    rho_spec() = default; // infinity
    rho_spec(const monomial &m) : value_(m) {}

    static rho_spec infinity()
    {
        return {};
    }

    bool is_infinite() const noexcept
    {
        return !value_.has_value();
    }

    const monomial &value() const
    {
        return *value_;
    }

    std::string to_string() const;

private:
    std::optional<monomial> value_;
};

using pair_sequence = std::function<series(std::int64_t n, const rational &order)>;

// Sequences (alpha_n, beta_n) with beta_n = sum_k alpha_k / ((q)_{n-k} (aq)_{n+k}),
// everything in base q^base. beta_n never has negative powers of q; alpha_floor(n)
// is a lower bound on val(alpha_n), convex in n.
struct bailey_pair {
    std::string name;
    monomial relative;   // a
    rational base = 1;
    pair_sequence alpha;
    pair_sequence beta;
    std::function<rational(std::int64_t)> alpha_floor;
};

struct pair_check {
    bool ok = true;
    std::optional<std::int64_t> first_failure;
    std::optional<mismatch> detail;
};

// Checks the defining relation for n = 0..n_max below `order`.
pair_check verify_pair(const bailey_pair &p, std::int64_t n_max, const rational &order);

// One step of the Bailey chain.
bailey_pair chain_step(const bailey_pair &p, const rho_spec &rho1, const rho_spec &rho2);

// Both sides of the n -> infinity limit of the Bailey lemma:
// sum_n (rho1)_n (rho2)_n (aq/rho1 rho2)^n beta_n
//   = (aq/rho1, aq/rho2)_inf / (aq, aq/rho1 rho2)_inf sum_n (rho1)_n (rho2)_n (aq/rho1 rho2)^n alpha_n / (aq/rho1, aq/rho2)_n
std::pair<series, series> limit_identity(const bailey_pair &p, const rho_spec &rho1, const rho_spec &rho2,
                                         const rational &order);

// sum_n (aq)_{2n} q^n beta_n = 1/(q)_inf sum_{r,n>=0} (-a)^n q^{3n(n+1)/2 + (2n+1) r} alpha_r
std::pair<series, series> partial_theta_fine(const bailey_pair &p, const rational &order);

// sum_n q^n beta_n = 1/(q, aq)_inf sum_{r,n>=0} (-a)^n q^{n(n+1)/2 + (2n+1) r} alpha_r
std::pair<series, series> partial_theta_basic(const bailey_pair &p, const rational &order);

// fifth_order, early_conditions, unit_z (formal symbol z), slater_L6.
bailey_pair builtin_pair(const std::string &name, const rational &base = 1);

std::vector<std::string> builtin_pair_names();

} // namespace qv
