#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <qv/rational.hpp>

namespace qv {

inline constexpr std::size_t max_symbols = 4;

// Exponent vector over the declared formal symbols (slot i <-> i-th declared name).
struct sym_exps {
    std::array<std::int32_t, max_symbols> e{};

    bool is_zero() const noexcept
    {
        for (auto v : e) {
            if (v != 0) {
                return false;
            }
        }
        return true;
    }

    sym_exps &operator+=(const sym_exps &o) noexcept
    {
        for (std::size_t i = 0; i < max_symbols; ++i) {
            e[i] += o.e[i];
        }
        return *this;
    }

    friend sym_exps operator+(sym_exps a, const sym_exps &b) noexcept
    {
        a += b;
        return a;
    }

    sym_exps operator-() const noexcept
    {
        sym_exps r;
        for (std::size_t i = 0; i < max_symbols; ++i) {
            r.e[i] = -e[i];
        }
        return r;
    }

    sym_exps scaled(std::int64_t k) const
    {
        sym_exps r;
        for (std::size_t i = 0; i < max_symbols; ++i) {
            r.e[i] = static_cast<std::int32_t>(e[i] * k);
        }
        return r;
    }

    friend auto operator<=>(const sym_exps &, const sym_exps &) = default;
    friend bool operator==(const sym_exps &, const sym_exps &) = default;
};

// Ordered set of formal symbol names, at most max_symbols of them.
class symbol_context {
public:
    symbol_context() = default;
    symbol_context(std::initializer_list<std::string> names);

    // Returns the slot of a declared name; throws undeclared_symbol otherwise.
    std::size_t slot(std::string_view name) const;
    bool declared(std::string_view name) const;
    void declare(const std::string &name);

    const std::vector<std::string> &names() const noexcept
    {
        return names_;
    }

    // Exponent vector of the bare symbol `name`.
    sym_exps unit(std::string_view name) const;

    static const symbol_context &standard();

private:
    std::vector<std::string> names_;
};

// Laurent polynomial in the formal symbols with rational coefficients.
class coefficient {
public:
    using term = std::pair<sym_exps, rational>;

    coefficient() = default;
    coefficient(const rational &c);
    coefficient(long c) : coefficient(rational(c)) {}

    static coefficient monomial(const rational &c, const sym_exps &e);

    bool is_zero() const noexcept
    {
        return terms_.empty();
    }

    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_zero());
    }

    // A single nonzero monomial, i.e. a unit of the Laurent ring.
    bool is_unit() const noexcept
    {
        return terms_.size() == 1;
    }

    // Value of a constant coefficient (zero for the zero coefficient).
    rational constant_value() const;

    const std::vector<term> &terms() const noexcept
    {
        return terms_;
    }

    coefficient &operator+=(const coefficient &o);
    coefficient &operator-=(const coefficient &o);
    coefficient &operator*=(const rational &c);

    // *this += a * b.
    void add_product(const coefficient &a, const coefficient &b);

    // *this += a * c * x^e.
    void add_scaled_monomial(const coefficient &a, const rational &c, const sym_exps &e);

    coefficient operator-() const;

    friend coefficient operator+(coefficient a, const coefficient &b)
    {
        a += b;
        return a;
    }

    friend coefficient operator-(coefficient a, const coefficient &b)
    {
        a -= b;
        return a;
    }

    friend coefficient operator*(const coefficient &a, const coefficient &b);

    // Inverse of a unit; throws not_invertible otherwise.
    coefficient inverse() const;

    // Multiplies every term by c * x^e.
    coefficient times_monomial(const rational &c, const sym_exps &e) const;

    bool is_integral() const;

    friend bool operator==(const coefficient &a, const coefficient &b);

    // Exact textual form, e.g. "2", "-1/2", "x^-1 + 3*x*y".
    std::string to_string(const symbol_context &ctx = symbol_context::standard()) const;

private:
    // Sorted by exponent vector, no zero entries.
    std::vector<term> terms_;
};

} // namespace qv
