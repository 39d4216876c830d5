#include "steininfo/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "steininfo/bounds.hpp"
#include "steininfo/checks.hpp"
#include "steininfo/io.hpp"
#include "steininfo/repro.hpp"
#include "steininfo/score_info.hpp"

namespace steininfo::cli {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double default_tail_tol() {
    if (const char* env = std::getenv("STEIN_TAIL_TOL")) {
        const double v = std::atof(env);
        if (v > 0.0 && v < 1.0) return v;
        throw std::invalid_argument("STEIN_TAIL_TOL must lie in (0, 1)");
    }
    return 1e-12;
}

// Distribution spec mini-grammar: family:param[,param...] or file:<path>.
Pmf parse_dist(const std::string& spec, double tail_tol) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("distribution spec must look like family:params or file:path");
    const std::string family = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (family == "file") return load_pmf(rest);

    std::vector<double> params;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty parameter in distribution spec");
        std::size_t used = 0;
        params.push_back(std::stod(tok, &used));
        if (used != tok.size())
            throw std::invalid_argument("bad numeric parameter in distribution spec: " + tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    if (family == "poisson") {
        if (params.size() != 1) throw std::invalid_argument("poisson spec takes one parameter");
        return make_poisson(params[0], tail_tol);
    }
    if (family == "binomial") {
        if (params.size() != 2) throw std::invalid_argument("binomial spec takes two parameters");
        return make_binomial(static_cast<int>(params[0]), params[1]);
    }
    if (family == "bernoulli") {
        if (params.size() != 1) throw std::invalid_argument("bernoulli spec takes one parameter");
        return make_binomial(1, params[0]);
    }
    if (family == "geometric") {
        if (params.size() != 1) throw std::invalid_argument("geometric spec takes one parameter");
        return make_geometric(params[0], tail_tol);
    }
    throw std::invalid_argument("unknown distribution family: " + family);
}

void emit_scalar(std::ostream& out, const std::string& key, double v, const std::string& format) {
    if (format == "json") {
        out << "{\"" << key << "\": " << fmt(v) << "}\n";
    } else if (format == "csv") {
        out << key << "\n" << fmt(v) << "\n";
    } else {
        out << fmt(v) << "\n";
    }
}

void emit_bound(std::ostream& out, const BoundReport& rep, const std::string& format) {
    if (format == "json") {
        out << bound_report_to_json(rep) << "\n";
        return;
    }
    if (format == "csv") {
        out << "distance,info,constant,error_term,bound,slack,holds,kind\n"
            << fmt(rep.distance_exact) << ',' << fmt(rep.info_value) << ','
            << fmt(rep.magic_constant) << ',' << fmt(rep.error_term) << ','
            << fmt(rep.bound_value) << ',' << fmt(rep.slack) << ','
            << (rep.holds ? "true" : "false") << ',' << rep.kind << "\n";
        return;
    }
    out << "kind      " << rep.kind << "\n"
        << "distance  " << fmt(rep.distance_exact) << "\n"
        << "info      " << fmt(rep.info_value) << "\n"
        << "constant  " << fmt(rep.magic_constant) << "\n"
        << "error     " << fmt(rep.error_term) << "\n"
        << "bound     " << fmt(rep.bound_value) << "\n"
        << "slack     " << fmt(rep.slack) << "\n"
        << "holds     " << (rep.holds ? "true" : "false") << "\n";
}

void emit_row(std::ostream& out, const ExampleRow& row, const std::string& format) {
    if (format == "json") {
        out << example_row_to_json(row) << "\n";
    } else {
        out << example_csv_header() << "\n" << example_csv_row(row) << "\n";
    }
}

int report_suites(const std::vector<CheckResult>& suites, std::ostream& out, std::ostream& err) {
    bool bad = false;
    for (const auto& s : suites) {
        out << s.name << ": " << (s.ok() ? "ok" : "VIOLATED") << " (instances=" << s.instances
            << ", worst=" << fmt(s.worst) << ")\n";
        if (!s.ok()) {
            bad = true;
            err << "check violation: " << s.violations.front() << "\n";
        }
    }
    return bad ? 2 : 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stein characterizations, discrete information functionals and "
                 "Poisson total-variation bounds"};
    app.require_subcommand(1);

    std::string dist_spec, output = "plain", example;
    double target_lambda = 1.0, lambda = 1.0, mu = 1.0;
    double tail_tol = 0.0;  // resolved after parsing so the env override is testable
    std::uint64_t seed = 0;
    int n = 10, window = 12;

    auto add_common = [&](CLI::App* cmd, bool needs_target) {
        cmd->add_option("--tail-tol", tail_tol, "truncation tail tolerance");
        cmd->add_option("--output", output, "plain, csv or json");
        if (needs_target)
            cmd->add_option("--target-lambda", target_lambda, "Poisson target mean")->required();
    };

    auto* k1 = app.add_subcommand("k1", "scaled Fisher information against a Poisson target");
    add_common(k1, true);
    k1->add_option("--dist", dist_spec, "distribution spec")->required();

    auto* k2 = app.add_subcommand("k2", "discrete Fisher information against a Poisson target");
    add_common(k2, true);
    k2->add_option("--dist", dist_spec, "distribution spec")->required();

    auto* jm = app.add_subcommand("jm", "Johnstone-MacGibbon information functional");
    add_common(jm, false);
    jm->add_option("--dist", dist_spec, "distribution spec")->required();

    auto* tv = app.add_subcommand("tv", "total variation distance to the Poisson target");
    add_common(tv, true);
    tv->add_option("--dist", dist_spec, "distribution spec")->required();

    auto* bk1 = app.add_subcommand("bound-k1", "K1 total-variation bound report");
    add_common(bk1, true);
    bk1->add_option("--dist", dist_spec, "distribution spec")->required();

    auto* bk2 = app.add_subcommand("bound-k2", "K2 total-variation bound report");
    add_common(bk2, true);
    bk2->add_option("--dist", dist_spec, "distribution spec")->required();

    auto* cs = app.add_subcommand("check-stein", "randomized operator/characterization suites");
    add_common(cs, false);
    cs->add_option("--seed", seed, "suite seed");
    cs->add_option("--window", window, "support size for random laws");

    auto* ci = app.add_subcommand("check-identity", "randomized identity/inequality suites");
    add_common(ci, false);
    ci->add_option("--seed", seed, "suite seed");

    auto* rp = app.add_subcommand("repro", "worked-example tables");
    add_common(rp, false);
    rp->add_option("example", example, "ex1, ex2 or ex3")->required();
    rp->add_option("--n", n, "number of summands");
    rp->add_option("--lambda", lambda, "target mean (ex1, ex3)");
    rp->add_option("--mu", mu, "mean scale (ex2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (tail_tol == 0.0) tail_tol = default_tail_tol();
        if (output != "plain" && output != "csv" && output != "json")
            throw std::invalid_argument("unknown output format: " + output);

        if (k1->parsed()) {
            emit_scalar(out, "k1", k1_scaled_fisher(target_lambda, parse_dist(dist_spec, tail_tol)),
                        output);
        } else if (k2->parsed()) {
            emit_scalar(out, "k2", k2_discrete_fisher(target_lambda, parse_dist(dist_spec, tail_tol)),
                        output);
        } else if (jm->parsed()) {
            emit_scalar(out, "jm", jm_fisher_information(parse_dist(dist_spec, tail_tol)), output);
        } else if (tv->parsed()) {
            const Pmf q = parse_dist(dist_spec, tail_tol);
            const Pmf p = make_poisson_covering(target_lambda, tail_tol, q.upper() + 2);
            emit_scalar(out, "tv", tv_distance(p, q), output);
        } else if (bk1->parsed()) {
            emit_bound(out, tv_bound_k1(target_lambda, parse_dist(dist_spec, tail_tol)), output);
        } else if (bk2->parsed()) {
            emit_bound(out, tv_bound_k2(target_lambda, parse_dist(dist_spec, tail_tol)), output);
        } else if (cs->parsed()) {
            std::vector<CheckResult> suites;
            suites.push_back(check_zero_mean_t1(seed, {0.5, 1.0, 2.0, 5.0}, 100, 1e-10));
            suites.push_back(check_zero_mean_t2(seed + 1, {0.5, 1.0, 2.0}, 50, 1e-10));
            suites.push_back(check_detection(seed + 2, 50, window, 1e-12));
            suites.push_back(check_factor_caps(seed + 3, {0.5, 1.0, 2.0, 5.0, 10.0}, 20, 60, 1e-12));
            return report_suites(suites, out, err);
        } else if (ci->parsed()) {
            std::vector<CheckResult> suites;
            suites.push_back(check_factorization(seed, 100, 1e-12, 1e-6));
            suites.push_back(check_identity_1(seed + 1, 200, 1e-10));
            suites.push_back(check_identity_2(seed + 2, 100, 1e-9));
            suites.push_back(check_hoelder(seed + 3, 25, 1e-12));
            return report_suites(suites, out, err);
        } else if (rp->parsed()) {
            ExampleRow row;
            if (example == "ex1") {
                row = ex1_bernoulli(n, lambda);
            } else if (example == "ex2") {
                row = ex2_mu_sqrt_n(n, mu);
            } else if (example == "ex3") {
                row = ex3_geometric(n, lambda);
            } else {
                throw std::invalid_argument("unknown example: " + example);
            }
            emit_row(out, row, output);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "parameter error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "io error: " << e.what() << "\n";
        return 1;
    }
}

std::vector<std::pair<std::string, std::string>> coverage_map() {
    return {
        {"make_poisson", "tv"},
        {"make_binomial", "k1"},
        {"make_geometric", "k2"},
        {"convolve", "repro"},
        {"convolve_n", "repro"},
        {"expectation", "tv"},
        {"mean", "repro"},
        {"cdf", "check-stein"},
        {"t1_apply", "check-stein"},
        {"canonical_f_z", "check-stein"},
        {"stein_solution_1", "bound-k1"},
        {"p_tilde", "check-stein"},
        {"t2_apply", "check-stein"},
        {"stein_solution_2", "check-identity"},
        {"characterization_residual", "check-stein"},
        {"r1_score", "check-identity"},
        {"r2_score", "check-identity"},
        {"k1_scaled_fisher", "k1"},
        {"k2_discrete_fisher", "k2"},
        {"jm_fisher_information", "jm"},
        {"factorization_check_1", "check-identity"},
        {"identity_check_1", "check-identity"},
        {"identity_check_2", "check-identity"},
        {"k1_subadditive_bound", "repro"},
        {"tv_distance", "tv"},
        {"optimal_tv_test_function", "bound-k1"},
        {"d_H", "check-identity"},
        {"stein_magic_H", "bound-k1"},
        {"stein_factor_sup_1", "check-stein"},
        {"stein_factor_sup_2", "check-stein"},
        {"tv_bound_k1", "bound-k1"},
        {"tv_bound_k2", "bound-k2"},
        {"h1_constant", "check-identity"},
        {"h2_constant", "check-identity"},
        {"ex1_bernoulli", "repro"},
        {"ex2_mu_sqrt_n", "repro"},
        {"ex3_geometric", "repro"},
    };
}

}  // namespace steininfo::cli
