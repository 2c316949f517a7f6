#pragma once

#include <optional>
#include <string>
#include <vector>

#include <qv/registry.hpp>
#include <qv/series.hpp>

namespace qv {

enum class verify_status { ok, fail, error };

std::string to_string(verify_status s);

struct verification_report {
    std::string identity;
    rational order;
    verify_status status = verify_status::ok;
    std::optional<mismatch> first_mismatch;
    double ms = 0;
    std::string error; // set when status is error
};

// Evaluates both sides below the order (the override if given) and compares.
// Evaluation errors are reported as status error.
verification_report check_identity(const identity_spec &spec, const std::optional<rational> &order = std::nullopt);

// A copy whose rhs is multiplied by (1 + q^(order - 1)).
identity_spec perturbed(const identity_spec &spec, const rational &order);

struct suite_filter {
    std::optional<std::string> only; // identity name
    std::optional<std::string> tag;
};

std::vector<identity_spec> select(const std::vector<identity_spec> &ids, const suite_filter &filter);

// Checks every identity on up to `jobs` threads; reports are sorted by name.
std::vector<verification_report> run_suite(const std::vector<identity_spec> &ids,
                                           const std::optional<rational> &order = std::nullopt,
                                           unsigned jobs = 1);

// 0 when all ok, 2 when any error, else 1.
int exit_code(const std::vector<verification_report> &reports);

} // namespace qv
