// Command-line front end: validate graphs, print invariants and series, run
// the identity checks and the cyclic-quotient oracle.
//
// Exit codes: 0 success, 1 validation or identity failure, 2 usage/parse error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "abelcover/io.hpp"
#include "abelcover/oracle.hpp"
#include "abelcover/poincare.hpp"

using namespace abelcover;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

ResolutionGraph load_valid(const std::string& path, std::optional<FiltrationMode> mode, bool check_rationality)
{
    ResolutionGraph g = load_graph_file(path);
    require_valid(g, {mode, check_rationality});
    return g;
}

int cmd_validate(const std::string& path, bool skip_rationality)
{
    const ResolutionGraph g = load_graph_file(path);
    const auto report = validate(g, {std::nullopt, !skip_rationality});
    if (!report.ok()) {
        std::cout << "invalid\n";
        for (const auto& issue : report.issues) {
            std::cout << "  " << to_string(issue.kind);
            for (std::size_t i = 0; i < issue.vertices.size(); ++i)
                std::cout << (i ? "," : " [") << issue.vertices[i] << (i + 1 == issue.vertices.size() ? "]" : "");
            if (!issue.detail.empty())
                std::cout << ": " << issue.detail;
            std::cout << "\n";
        }
        return kFailure;
    }
    const Integer d = determinant(neg_intersection_matrix(g));
    if (skip_rationality)
        std::cout << "valid, rationality not checked, d = " << d << "\n";
    else
        std::cout << "valid, rational (p_a = " << is_rational(g).arithmetic_genus << "), d = " << d << "\n";
    return kOk;
}

int cmd_invariants(const std::string& path)
{
    const ResolutionGraph g = load_valid(path, std::nullopt, true);
    std::cout << invariants_to_text(g, compute_invariants(g));
    return kOk;
}

int cmd_series(const std::string& path, const std::string& kind, std::int64_t degree, const std::string& format,
               bool skip_rationality)
{
    const FiltrationMode mode = kind == "curve" ? FiltrationMode::Curve : FiltrationMode::Divisorial;
    const ResolutionGraph g = load_graph_file(path);
    if (mode == FiltrationMode::Divisorial && g.marked.empty())
        throw Error(ErrorCode::ModeMismatch, "--kind " + kind + " needs marked components");
    if (mode == FiltrationMode::Curve && g.branches.empty())
        throw Error(ErrorCode::ModeMismatch, "--kind curve needs branches");
    require_valid(g, {mode, !skip_rationality});

    const FiltrationSpec spec{g, mode, degree};
    const bool json = format == "json";
    auto emit = [json](const auto& series) {
        std::cout << (json ? series_to_json(series) : series_to_text(series)) << "\n";
    };
    if (kind == "q")
        emit(compute_Q(spec));
    else if (kind == "p")
        emit(compute_P(spec));
    else if (kind == "pg")
        emit(compute_PG(spec));
    else
        emit(compute_PG_curve(spec));
    return kOk;
}

int cmd_check(const std::string& path, std::int64_t degree, bool skip_rationality)
{
    const ResolutionGraph g = load_valid(path, FiltrationMode::Divisorial, !skip_rationality);
    bool pass = true;

    const auto lemma = check_lemma1(g);
    std::cout << "orders: " << (lemma.agree ? "agree" : "DISAGREE") << ", orders (";
    for (std::size_t s = 0; s < lemma.orders.size(); ++s)
        std::cout << (s ? "," : "") << lemma.orders[s].by_denominators << "/" << lemma.orders[s].by_cokernel;
    std::cout << ")" << (lemma.divides_determinant ? "" : ", some order does not divide d") << "\n";
    pass = pass && lemma.agree && lemma.divides_determinant;

    const auto inv = compute_invariants(g);
    try {
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t s = 0; s < g.size(); ++s)
                equivariant_exponent(inv, i, s);
        std::cout << "integrality: ok\n";
    } catch (const Error& e) {
        std::cout << "integrality: FAIL " << e.what() << "\n";
        pass = false;
    }

    const auto corollary = check_corollary({g, FiltrationMode::Divisorial, degree});
    if (corollary.equal) {
        std::cout << "corollary: equal up to degree " << degree << "\n";
    } else {
        const auto& diff = *corollary.first_difference;
        auto show = [](const std::optional<Integer>& c) { return c ? c->str() : std::string("0"); };
        std::cout << "corollary: differs at " << monomial_string(diff.exponent, diff.scale)
                  << ": red P^G = " << show(diff.lhs) << ", Q(t^d) = " << show(diff.rhs) << "\n";
        pass = false;
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kOk : kFailure;
}

int cmd_oracle(std::int64_t n, std::int64_t q, std::optional<std::size_t> vertex, std::int64_t degree)
{
    const auto bs = hj_expansion(n, q);
    if (vertex && (*vertex < 1 || *vertex > bs.size()))
        throw Error(ErrorCode::InvalidParameters, "--vertex must be in 1.." + std::to_string(bs.size()));

    bool all_equal = true;
    std::cout << "n q vertex bound verdict\n";
    for (std::size_t v = 1; v <= bs.size(); ++v) {
        if (vertex && v != *vertex)
            continue;
        const auto verdict = compare_with_formula({n, q, v - 1, degree});
        std::cout << n << " " << q << " " << v << " " << degree << " ";
        if (verdict.equal)
            std::cout << "equal\n";
        else
            std::cout << "differs at t^" << *verdict.first_degree << ": oracle " << verdict.oracle_coefficient
                      << ", formula " << verdict.formula_coefficient << "\n";
        all_equal = all_equal && verdict.equal;
    }
    return all_equal ? kOk : kFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Poincare series of filtrations on rational surface singularities and their universal abelian covers"};
    app.require_subcommand(1);

    std::string file;
    bool skip_rationality = false;

    auto* validate_cmd = app.add_subcommand("validate", "check tree shape, definiteness and rationality");
    validate_cmd->add_option("file", file, "graph JSON file")->required();
    validate_cmd->add_flag("--skip-rationality", skip_rationality, "do not apply Artin's criterion");

    auto* invariants_cmd = app.add_subcommand("invariants", "print d, m, G, element orders and characters");
    invariants_cmd->add_option("file", file, "graph JSON file")->required();

    std::string kind = "p";
    std::string format = "text";
    std::int64_t degree = 10;
    auto* series_cmd = app.add_subcommand("series", "print a truncated Poincare series");
    series_cmd->add_option("file", file, "graph JSON file")->required();
    series_cmd->add_option("--kind", kind, "q | p | pg | curve")->check(CLI::IsMember({"q", "p", "pg", "curve"}));
    series_cmd->add_option("--degree", degree, "total-degree bound")->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    series_cmd->add_flag("--skip-rationality", skip_rationality, "do not apply Artin's criterion");

    auto* check_cmd = app.add_subcommand("check", "verify the reduction identity and the element orders");
    check_cmd->add_option("file", file, "graph JSON file")->required();
    check_cmd->add_option("--degree", degree, "total-degree bound")->check(CLI::NonNegativeNumber);
    check_cmd->add_flag("--skip-rationality", skip_rationality, "do not apply Artin's criterion");

    std::int64_t n = 0;
    std::int64_t q = 0;
    std::size_t vertex = 0;
    auto* oracle_cmd = app.add_subcommand("oracle", "compare Int Q with invariant-monomial counts on C^2/(Z/n)");
    oracle_cmd->add_option("--n", n, "group order")->required();
    oracle_cmd->add_option("--q", q, "weight of the action on y")->required();
    auto* vertex_opt = oracle_cmd->add_option("--vertex", vertex, "chain vertex, 1-based");
    auto* all_flag = oracle_cmd->add_flag("--all", "every chain vertex (default)");
    vertex_opt->excludes(all_flag);
    oracle_cmd->add_option("--degree", degree, "degree bound")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate_cmd)
            return cmd_validate(file, skip_rationality);
        if (*invariants_cmd)
            return cmd_invariants(file);
        if (*series_cmd)
            return cmd_series(file, kind, degree, format, skip_rationality);
        if (*check_cmd)
            return cmd_check(file, degree, skip_rationality);
        if (*oracle_cmd)
            return cmd_oracle(n, q, vertex_opt->count() ? std::optional<std::size_t>(vertex) : std::nullopt, degree);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::ModeMismatch:
        case ErrorCode::InvalidParameters:
        case ErrorCode::UnknownVertex:
            return kUsage;
        default:
            return kFailure;
        }
    }
    return kUsage;
}
