#include <qv/tools/cli.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <qv/catalog.hpp>
#include <qv/dsl.hpp>
#include <qv/errors.hpp>
#include <qv/registry.hpp>
#include <qv/verifier.hpp>

namespace qv::tools {

namespace {

using json = nlohmann::ordered_json;

json report_json(const verification_report &r)
{
    json j;
    j["identity"] = r.identity;
    if (is_integer(r.order)) {
        j["order"] = to_int64(r.order.get_num());
    } else {
        j["order"] = to_string(r.order);
    }
    j["status"] = to_string(r.status);
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"exponent", to_string(r.first_mismatch->exponent)},
                               {"lhs", r.first_mismatch->lhs.to_string()},
                               {"rhs", r.first_mismatch->rhs.to_string()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["ms"] = r.ms;
    if (r.status == verify_status::error) {
        j["error"] = r.error;
    }
    return j;
}

void print_table(const std::vector<verification_report> &reports, std::ostream &out)
{
    std::size_t width = 8;
    for (const auto &r : reports) {
        width = std::max(width, r.identity.size());
    }
    out << std::left << std::setw(static_cast<int>(width)) << "identity" << "  order  status  " << std::right
        << std::setw(9) << "ms" << "  detail\n";
    std::size_t ok = 0;
    for (const auto &r : reports) {
        out << std::left << std::setw(static_cast<int>(width)) << r.identity << "  " << std::setw(5)
            << to_string(r.order) << "  " << std::setw(6) << to_string(r.status) << "  " << std::right
            << std::setw(9) << std::fixed << std::setprecision(1) << r.ms << "  ";
        if (r.first_mismatch) {
            out << "q^" << to_string(r.first_mismatch->exponent) << ": lhs " << r.first_mismatch->lhs.to_string()
                << ", rhs " << r.first_mismatch->rhs.to_string();
        } else if (r.status == verify_status::error) {
            out << r.error;
        }
        out << '\n';
        ok += r.status == verify_status::ok;
    }
    out << ok << "/" << reports.size() << " ok\n";
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series identity verifier", "qverify"};
    app.require_subcommand(1);

    auto *verify = app.add_subcommand("verify", "Check registered or file-supplied identities");
    std::vector<std::string> suites;
    std::string only;
    std::string tag;
    std::int64_t order = 0;
    std::string json_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    bool list = false;
    bool perturb = false;
    verify->add_option("--suite", suites, "Suite file (repeatable); replaces the built-in registry")
        ->check(CLI::ExistingFile);
    auto *only_opt = verify->add_option("--only", only, "Run the single identity NAME");
    auto *tag_opt = verify->add_option("--tag", tag, "Run identities carrying TAG");
    only_opt->excludes(tag_opt);
    verify->add_option("--order", order, "Override every identity's order")->check(CLI::PositiveNumber);
    verify->add_option("--json", json_path, "Write a JSON report to PATH ('-' for stdout, table then goes to stderr)");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    verify->add_flag("--list", list, "List the selected identities and exit");
    verify->add_flag("--perturb", perturb, "Multiply each rhs by (1 + q^(order-1)) before checking");

    auto *eval = app.add_subcommand("eval", "Print the expansion of an expression");
    std::string expr;
    std::int64_t eval_order = 20;
    eval->add_option("expr", expr, "Expression")->required();
    eval->add_option("--order", eval_order, "Truncation order")->check(CLI::PositiveNumber);

    auto *entries = app.add_subcommand("catalog", "List the named series");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    if (*entries) {
        for (const auto &e : list_entries()) {
            out << e.name << "(";
            for (std::size_t i = 0; i < e.params.size(); ++i) {
                out << (i ? ", " : "") << e.params[i].name;
            }
            out << ")  " << e.ref << "\n    " << e.definition << '\n';
        }
        return 0;
    }

    if (*eval) {
        try {
            series s = dsl::evaluate(dsl::parse_expr(expr), rational(static_cast<long>(eval_order)));
            out << s.to_string() << '\n';
            return 0;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
    }

    std::vector<identity_spec> ids;
    try {
        if (suites.empty()) {
            ids = builtin_identities();
        } else {
            for (const auto &path : suites) {
                auto more = load_suite_file(path);
                ids.insert(ids.end(), more.begin(), more.end());
            }
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    suite_filter filter;
    if (*only_opt) {
        filter.only = only;
    }
    if (*tag_opt) {
        filter.tag = tag;
    }
    ids = select(ids, filter);
    if (ids.empty()) {
        err << "warning: no identities match the filter\n";
    }

    if (list) {
        for (const auto &id : ids) {
            out << id.to_record() << '\n';
        }
        return 0;
    }

    std::optional<rational> order_override;
    if (order > 0) {
        order_override = rational(static_cast<long>(order));
    }
    if (perturb) {
        for (auto &id : ids) {
            id = perturbed(id, order_override ? *order_override : id.order);
        }
    }

    auto reports = run_suite(ids, order_override, jobs);
    print_table(reports, json_path == "-" ? err : out);

    if (!json_path.empty()) {
        json arr = json::array();
        for (const auto &r : reports) {
            arr.push_back(report_json(r));
        }
        if (json_path == "-") {
            out << arr.dump(2) << '\n';
        } else {
            std::ofstream f(json_path);
            if (!f) {
                err << "error: cannot write '" << json_path << "'\n";
                return 2;
            }
            f << arr.dump(2) << '\n';
        }
    }
    return exit_code(reports);
}

} // namespace qv::tools
