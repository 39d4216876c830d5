#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "steininfo/cli.hpp"
#include "steininfo/io.hpp"
#include "steininfo/pmf.hpp"

using namespace steininfo;

namespace {

struct CliOutcome {
    int status = 0;
    std::string out;
    std::string err;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("steininfo");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliOutcome res;
    res.status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace

TEST_CASE("scalar commands") {
    const CliOutcome k1 = run_cli({"k1", "--target-lambda", "1", "--dist", "binomial:10,0.1"});
    CHECK(k1.status == 0);
    CHECK(std::stod(k1.out) == doctest::Approx(1.0 / 90.0).epsilon(1e-9));

    const CliOutcome k2 = run_cli({"k2", "--target-lambda", "1", "--dist", "geometric:0.5"});
    CHECK(k2.status == 0);
    CHECK(std::stod(k2.out) == doctest::Approx(1.0).epsilon(1e-7));

    const CliOutcome jm = run_cli({"jm", "--dist", "geometric:0.5"});
    CHECK(jm.status == 0);
    CHECK(std::stod(jm.out) == doctest::Approx(1.0).epsilon(1e-7));

    const CliOutcome tv = run_cli({"tv", "--target-lambda", "1", "--dist", "poisson:1"});
    CHECK(tv.status == 0);
    CHECK(std::stod(tv.out) < 1e-10);

    const CliOutcome js =
        run_cli({"k1", "--target-lambda", "1", "--dist", "binomial:10,0.1", "--output", "json"});
    CHECK(js.out.find("\"k1\"") != std::string::npos);
}

TEST_CASE("bound commands") {
    const CliOutcome b1 = run_cli({"bound-k1", "--target-lambda", "1", "--dist", "binomial:10,0.1"});
    CHECK(b1.status == 0);
    CHECK(b1.out.find("holds     true") != std::string::npos);

    const CliOutcome b2 = run_cli({"bound-k2", "--target-lambda", "1", "--dist", "binomial:10,0.1"});
    CHECK(b2.status == 1);
    CHECK(b2.err.find("full support") != std::string::npos);

    const CliOutcome ok2 = run_cli({"bound-k2", "--target-lambda", "1", "--dist", "geometric:0.5",
                                    "--output", "json"});
    CHECK(ok2.status == 0);
    CHECK(ok2.out.find("\"holds\":true") != std::string::npos);
}

TEST_CASE("repro command") {
    const CliOutcome ex3 = run_cli({"repro", "ex3", "--n", "20", "--lambda", "1", "--output", "csv"});
    CHECK(ex3.status == 0);
    CHECK(ex3.out.find("n,lambda,mu,tv") == 0);
    const CliOutcome again =
        run_cli({"repro", "ex3", "--n", "20", "--lambda", "1", "--output", "csv"});
    CHECK(ex3.out == again.out);  // byte-identical reruns

    const CliOutcome ex1 = run_cli({"repro", "ex1", "--n", "10", "--lambda", "1", "--output", "csv"});
    // khj reference sits in the ninth column of the data row
    std::string data = ex1.out.substr(ex1.out.find('\n') + 1);
    std::stringstream ss(data);
    std::string field;
    for (int i = 0; i < 9; ++i) std::getline(ss, field, ',');
    CHECK(std::stod(field) == doctest::Approx(0.2).epsilon(1e-15));

    const CliOutcome bad = run_cli({"repro", "ex9", "--n", "5"});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("parameter error") == 0);
}

TEST_CASE("file specs and diagnostics") {
    const std::string path = "/tmp/steininfo_test_pmf.json";
    {
        std::ofstream f(path);
        f << pmf_to_json(make_geometric(0.5, 1e-12));
    }
    const CliOutcome tv = run_cli({"tv", "--target-lambda", "1", "--dist", "file:" + path});
    CHECK(tv.status == 0);
    CHECK(std::stod(tv.out) > 0.05);

    const std::string badpath = "/tmp/steininfo_bad_pmf.json";
    {
        std::ofstream f(badpath);
        f << "{not json";
    }
    const CliOutcome bad = run_cli({"tv", "--target-lambda", "1", "--dist", "file:" + badpath});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("io error") == 0);

    const CliOutcome missing = run_cli({"tv", "--target-lambda", "1", "--dist", "file:/nowhere.json"});
    CHECK(missing.status == 1);

    const CliOutcome unknown = run_cli({"k1", "--target-lambda", "1", "--dist", "cauchy:1"});
    CHECK(unknown.status == 1);
    CHECK(unknown.err.find("parameter error") == 0);

    const CliOutcome domain = run_cli({"k1", "--target-lambda", "1", "--dist", "binomial:10,1.5"});
    CHECK(domain.status == 1);
}

TEST_CASE("check suites run clean at the default seed") {
    const CliOutcome cs = run_cli({"check-stein", "--seed", "0"});
    CHECK(cs.status == 0);
    CHECK(cs.out.find("VIOLATED") == std::string::npos);

    const CliOutcome ci = run_cli({"check-identity", "--seed", "0"});
    CHECK(ci.status == 0);
    CHECK(ci.out.find("VIOLATED") == std::string::npos);
}

TEST_CASE("tail tolerance environment override") {
    setenv("STEIN_TAIL_TOL", "1e-4", 1);
    const CliOutcome coarse = run_cli({"k2", "--target-lambda", "1", "--dist", "geometric:0.5"});
    unsetenv("STEIN_TAIL_TOL");
    const CliOutcome fine = run_cli({"k2", "--target-lambda", "1", "--dist", "geometric:0.5"});
    CHECK(coarse.status == 0);
    CHECK(fine.status == 0);
    CHECK(coarse.out != fine.out);  // the coarser truncation is visible
}

TEST_CASE("every operation is reachable from a command") {
    const std::set<std::string> commands = {"k1",         "k2",          "jm",   "tv",
                                            "bound-k1",   "bound-k2",    "repro", "check-stein",
                                            "check-identity"};
    const std::vector<std::string> ops = {
        "make_poisson",       "make_binomial",        "make_geometric",
        "convolve",           "convolve_n",           "expectation",
        "mean",               "cdf",                  "t1_apply",
        "canonical_f_z",      "stein_solution_1",     "p_tilde",
        "t2_apply",           "stein_solution_2",     "characterization_residual",
        "r1_score",           "r2_score",             "k1_scaled_fisher",
        "k2_discrete_fisher", "jm_fisher_information", "factorization_check_1",
        "identity_check_1",   "identity_check_2",     "k1_subadditive_bound",
        "tv_distance",        "optimal_tv_test_function", "d_H",
        "stein_magic_H",      "stein_factor_sup_1",   "stein_factor_sup_2",
        "tv_bound_k1",        "tv_bound_k2",          "h1_constant",
        "h2_constant",        "ex1_bernoulli",        "ex2_mu_sqrt_n",
        "ex3_geometric"};
    const auto map = cli::coverage_map();
    for (const auto& op : ops) {
        bool found = false;
        for (const auto& [name, cmd] : map) {
            if (name == op) {
                found = true;
                CHECK(commands.count(cmd) == 1);
            }
        }
        INFO("operation ", op);
        CHECK(found);
    }
}
