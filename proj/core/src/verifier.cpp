#include <qv/verifier.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <qv/errors.hpp>

namespace qv {

std::string to_string(verify_status s)
{
    switch (s) {
    case verify_status::ok:
        return "ok";
    case verify_status::fail:
        return "fail";
    case verify_status::error:
        return "error";
    }
    return "error";
}

verification_report check_identity(const identity_spec &spec, const std::optional<rational> &order)
{
    verification_report rep;
    rep.identity = spec.name;
    rep.order = order ? *order : spec.order;
    auto start = std::chrono::steady_clock::now();
    try {
        const symbol_context &ctx = spec.symbols ? *spec.symbols : symbol_context::standard();
        series lhs = dsl::evaluate(spec.lhs, rep.order, ctx);
        series rhs = dsl::evaluate(spec.rhs, rep.order, ctx);
        equality_report eq = eq_up_to(lhs, rhs, rep.order);
        rep.status = eq.equal ? verify_status::ok : verify_status::fail;
        rep.first_mismatch = eq.first_mismatch;
    } catch (const std::exception &e) {
        rep.status = verify_status::error;
        rep.error = e.what();
    }
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

identity_spec perturbed(const identity_spec &spec, const rational &order)
{
    auto bump = std::make_shared<dsl::node>();
    bump->kind = dsl::op::q_power;
    bump->value = order - 1;
    auto one = std::make_shared<dsl::node>();
    one->kind = dsl::op::number;
    one->value = 1;
    auto factor = std::make_shared<dsl::node>();
    factor->kind = dsl::op::add;
    factor->args = {one, bump};
    auto rhs = std::make_shared<dsl::node>();
    rhs->kind = dsl::op::mul;
    rhs->args = {spec.rhs, factor};

    identity_spec out = spec;
    out.name = spec.name + "-perturbed";
    out.rhs = rhs;
    out.order = order;
    return out;
}

std::vector<identity_spec> select(const std::vector<identity_spec> &ids, const suite_filter &filter)
{
    std::vector<identity_spec> out;
    for (const auto &id : ids) {
        if (filter.only && id.name != *filter.only) {
            continue;
        }
        if (filter.tag && !id.has_tag(*filter.tag)) {
            continue;
        }
        out.push_back(id);
    }
    return out;
}

std::vector<verification_report> run_suite(const std::vector<identity_spec> &ids, const std::optional<rational> &order,
                                           unsigned jobs)
{
    std::vector<verification_report> reports(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) {
            reports[i] = check_identity(ids[i], order);
        }
    };
    unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(ids.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();
    std::stable_sort(reports.begin(), reports.end(),
                     [](const auto &a, const auto &b) { return a.identity < b.identity; });
    return reports;
}

int exit_code(const std::vector<verification_report> &reports)
{
    bool fail = false;
    for (const auto &r : reports) {
        if (r.status == verify_status::error) {
            return 2;
        }
        fail = fail || r.status == verify_status::fail;
    }
    return fail ? 1 : 0;
}

} // namespace qv
