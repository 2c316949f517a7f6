#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <qv/coefficient.hpp>
#include <qv/rational.hpp>
#include <qv/series.hpp>

namespace qv::dsl {

enum class op {
    number,  // value
    q_power, // q^value
    symbol,  // declared formal symbol `name`
    ident,   // bare identifier argument such as inf or a pair name
    call,    // name(args...)
    neg,
    add,
    sub,
    mul,
    div,
    pow, // args[0]^exponent
};

struct node;
using node_ptr = std::shared_ptr<const node>;

struct node {
    op kind = op::number;
    rational value;
    std::string name;
    std::vector<node_ptr> args;
    std::int64_t exponent = 0;
};

// Grammar:
//   expr    := term (("+" | "-") term)*
//   term    := factor (("*" | "/") factor)*
//   factor  := "-" factor | atom ("^" int)?
//   atom    := rational | "q" ("^" rexp)? | symbol | call | "(" expr ")"
//   rexp    := int | "(" int "/" int ")"
//   call    := name "(" arg (("," | ";") arg)* ")"
// Numeric subexpressions are folded to a single literal.
node_ptr parse_expr(std::string_view text, const symbol_context &ctx = symbol_context::standard());

// Canonical text; parse(print(e)) is structurally equal to e.
std::string print(const node_ptr &e);

bool same(const node_ptr &a, const node_ptr &b);

// Evaluates below `order` (the result is truncated there).
series evaluate(const node_ptr &e, const rational &order, const symbol_context &ctx = symbol_context::standard());

bool is_function(std::string_view name);

// Built-in functions followed by catalog entries.
std::vector<std::string> function_names();

} // namespace qv::dsl
