#include "qsym/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <utility>

#include <CLI11.hpp>

#include "qsym/errors.hpp"
#include "qsym/lgv.hpp"
#include "qsym/qfun.hpp"
#include "qsym/symfun.hpp"
#include "qsym/verify.hpp"

namespace qsym {

namespace {

struct ComputeRequest {
    std::string family = "qI";
    std::string lambda;
    std::string mu;
    int k = 0;
    int m = 0;
    std::string method;
    bool json = false;
};

using Route = std::pair<std::string, std::function<LaurentPoly()>>;

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void print(std::ostream &out, const LaurentPoly &p, bool json) { out << (json ? p.to_json() : p.to_string()) << '\n'; }

std::vector<Route> schur_routes(const ComputeRequest &req)
{
    const Partition lambda = Partition::parse(req.lambda);
    const Partition mu = Partition::parse(req.mu);
    const VariableSpec spec{req.k, req.m};
    std::vector<Route> routes;
    if (req.family == "schur") {
        if (spec.k != 0) {
            throw precondition_error("the schur family uses only type A variables; pass --k 0");
        }
        const auto n = static_cast<std::size_t>(std::max(spec.m, 0));
        routes.emplace_back("definition", [=] { return schur_skew(lambda, mu, Alphabet::plain(n)); });
        if (mu.empty()) {
            routes.emplace_back("tableau", [=] { return spt_weight_sum(spec, lambda, mu); });
        }
        return routes;
    }
    if (!mu.empty()) {
        throw precondition_error("family " + req.family + " takes no inner partition");
    }
    if (req.family == "symp-schur") {
        if (spec.m != 0) {
            throw precondition_error("the symp-schur family uses only symplectic variables; pass --m 0");
        }
        routes.emplace_back("definition", [=] { return symp_schur(lambda, spec.k); });
        routes.emplace_back("tableau", [=] { return inter_schur(lambda, spec, SchurMethod::tableau); });
        return routes;
    }
    routes.emplace_back("definition", [=] { return inter_schur(lambda, spec, SchurMethod::definition); });
    routes.emplace_back("tableau", [=] { return inter_schur(lambda, spec, SchurMethod::tableau); });
    return routes;
}

std::vector<Route> q_routes(const ComputeRequest &req)
{
    const StrictPartition lambda = StrictPartition::parse(req.lambda);
    const StrictPartition mu = StrictPartition::parse(req.mu);
    const VariableSpec spec{req.k, req.m};
    std::vector<Route> routes;
    routes.emplace_back("definition", [=] { return qI_def(lambda, mu, spec); });
    routes.emplace_back("tableau", [=] { return qI_tableau(lambda, mu, spec); });
    if (req.family == "qA") {
        if (spec.k != 0) {
            throw precondition_error("the qA family uses only type A variables; pass --k 0");
        }
        routes.emplace_back("pfaffian", [=] { return q_skew_jp(QFamily::A, lambda, mu, spec); });
    }
    else if (req.family == "qC") {
        if (spec.m != 0) {
            throw precondition_error("the qC family uses only symplectic variables; pass --m 0");
        }
        routes.emplace_back("pfaffian", [=] { return q_skew_jp(QFamily::C, lambda, mu, spec); });
    }
    else {
        routes.emplace_back("pfaffian", [=] { return qI(lambda, mu, spec, QMethod::pfaffian); });
    }
    routes.emplace_back("branch", [=] { return qI_branch(lambda, mu, spec); });
    routes.emplace_back("lgv", [=] { return lgv_weight_sum(lambda, mu, spec); });
    return routes;
}

int cmd_compute(const ComputeRequest &req, std::ostream &out, std::ostream &err)
{
    const bool q_side = req.family == "qA" || req.family == "qC" || req.family == "qI";
    std::vector<Route> routes = q_side ? q_routes(req) : schur_routes(req);
    std::string method = req.method;
    if (method.empty()) {
        method = req.family == "qI" ? "all" : "definition";
    }
    if (method != "all") {
        const auto it = std::find_if(routes.begin(), routes.end(), [&](const Route &r) { return r.first == method; });
        if (it == routes.end()) {
            throw usage_error("method " + method + " is not available for family " + req.family);
        }
        print(out, it->second(), req.json);
        return exit_ok;
    }
    std::vector<LaurentPoly> values;
    for (const auto &[name, route] : routes) {
        values.push_back(route());
        err << name << ": " << values.back().to_string() << '\n';
    }
    const bool agree = std::all_of(values.begin(), values.end(), [&](const LaurentPoly &v) { return v == values.front(); });
    if (!agree) {
        err << "error: methods disagree\n";
        return exit_disagreement;
    }
    print(out, values.front(), req.json);
    return exit_ok;
}

int cmd_series(int k, int m, int degree, bool json, std::ostream &out, std::ostream &err)
{
    if (degree < 0) {
        throw precondition_error("series degree must be nonnegative");
    }
    const VariableSpec spec{k, m};
    QContext ctx(spec);
    int status = exit_ok;
    for (int l = 0; l <= degree; ++l) {
        const LaurentPoly &value = ctx.q(QFamily::I, l);
        print(out, value, json);
        const StrictPartition row = l == 0 ? StrictPartition() : StrictPartition({l});
        if (!(qt_weight_sum(spec, row, StrictPartition(), LengthCheck::skip) == value)) {
            err << "error: coefficient of z^" << l << " differs from the one-row tableau sum\n";
            status = exit_disagreement;
        }
    }
    return status;
}

int cmd_verify(const std::string &suite, const VerifyBudget &budget, std::ostream &out)
{
    bool ok = true;
    for (const PropertyReport &r : run_suite(suite, budget)) {
        out << r.to_string() << '\n';
        ok = ok && r.passed();
    }
    return ok ? exit_ok : exit_disagreement;
}

void apply_term_limit()
{
    const char *value = std::getenv("QSYM_MAX_TERMS");
    if (value == nullptr || *value == '\0') {
        set_max_terms(0);
        return;
    }
    const std::string_view text(value);
    std::size_t limit = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), limit);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw parse_error("QSYM_MAX_TERMS must be a nonnegative integer, got '" + std::string(text) + "'");
    }
    set_max_terms(limit);
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact symplectic and intermediate Q-polynomials and Schur analogues", "qsym"};
    app.require_subcommand(1);

    ComputeRequest req;
    auto *compute = app.add_subcommand("compute", "Compute one polynomial");
    compute->add_option("--family", req.family, "schur, symp-schur, inter-schur, qA, qC or qI")
        ->check(CLI::IsMember({"schur", "symp-schur", "inter-schur", "qA", "qC", "qI"}))
        ->capture_default_str();
    compute->add_option("--lambda", req.lambda, "Outer partition, e.g. 3,1")->required();
    compute->add_option("--mu", req.mu, "Inner partition (default empty)");
    compute->add_option("--k", req.k, "Number of symplectic variables")->capture_default_str();
    compute->add_option("--m", req.m, "Number of type A variables")->capture_default_str();
    compute->add_option("--method", req.method, "definition, tableau, pfaffian, branch, lgv or all")
        ->check(CLI::IsMember({"definition", "tableau", "pfaffian", "branch", "lgv", "all"}));
    compute->add_flag("--json", req.json, "Print JSON instead of text");

    int series_k = 0;
    int series_m = 0;
    int series_degree = 6;
    bool series_json = false;
    auto *series = app.add_subcommand("series", "Print the one-row values q_0..q_D");
    series->add_option("--k", series_k)->capture_default_str();
    series->add_option("--m", series_m)->capture_default_str();
    series->add_option("--degree", series_degree, "Largest power of z")->capture_default_str();
    series->add_flag("--json", series_json);

    std::string suite = "all";
    VerifyBudget budget;
    auto *verify = app.add_subcommand("verify", "Run the cross-verification suites");
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"ring", "tableaux", "schur", "qfun", "lgv", "all"}))
        ->capture_default_str();
    verify->add_option("--max-weight", budget.max_weight, "Largest partition weight")->capture_default_str();
    verify->add_option("--max-vars", budget.max_vars, "Largest k+m")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }

    try {
        apply_term_limit();
        if (compute->parsed()) {
            return cmd_compute(req, out, err);
        }
        if (series->parsed()) {
            return cmd_series(series_k, series_m, series_degree, series_json, out, err);
        }
        return cmd_verify(suite, budget, out);
    }
    catch (const parse_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }
    catch (const precondition_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_precondition;
    }
    catch (const term_limit_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_term_limit;
    }
}

} // namespace qsym
