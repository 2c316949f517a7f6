#pragma once

#include <functional>
#include <string>
#include <vector>

#include <qv/bailey.hpp>
#include <qv/monomial.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv {

enum class param_kind {
    integer,  // a positive integer such as k
    monomial, // a parameter monomial, formal symbols allowed
    extended, // a monomial or inf
};

// Arguments are monomials or inf; integers travel as scalar monomials.
using catalog_args = std::vector<rho_spec>;

struct catalog_param {
    std::string name;
    param_kind kind = param_kind::monomial;
};

struct catalog_entry {
    std::string name;
    std::vector<catalog_param> params;
    std::string ref;         // the display the entry transcribes
    std::string definition;  // the defining sum in plain text
    std::function<series(const catalog_args &, const rational &order)> eval;
};

const std::vector<catalog_entry> &list_entries();

const catalog_entry &find_entry(const std::string &name);

bool has_entry(const std::string &name);

// Evaluates a named entry; checks arity and parameter kinds.
series eval_named(const std::string &name, const catalog_args &args, const rational &order);

} // namespace qv
