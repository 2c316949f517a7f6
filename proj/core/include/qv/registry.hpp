#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <qv/coefficient.hpp>
#include <qv/dsl.hpp>
#include <qv/rational.hpp>

namespace qv {

inline constexpr std::int64_t default_order = 50;

struct identity_spec {
    std::string name;
    dsl::node_ptr lhs;
    dsl::node_ptr rhs;
    rational order = default_order;
    std::vector<std::string> tags;
    std::shared_ptr<const symbol_context> symbols;

    bool has_tag(std::string_view tag) const;

    // Canonical record text, parseable by parse_suite.
    std::string to_record() const;
};

// Suite text: one record per line,
//   name [@order] [#tag,...] : expr == expr
// Blank lines and lines starting with '#' are skipped.
// "%symbols a,b,c" sets the formal symbols for the records that follow (default x,y,z).
// Throws qv::error naming `source` and the line on malformed input.
std::vector<identity_spec> parse_suite(std::string_view text, const std::string &source = "<suite>");

std::vector<identity_spec> load_suite_file(const std::string &path);

const std::string &builtin_suite_text();

// The registered identities, parsed once.
const std::vector<identity_spec> &builtin_identities();

} // namespace qv
