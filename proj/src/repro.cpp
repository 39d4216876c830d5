#include "steininfo/repro.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "steininfo/bounds.hpp"
#include "steininfo/score_info.hpp"

namespace steininfo {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

ExampleRow bernoulli_sum_row(int n, double lambda) {
    if (n < 1) throw std::invalid_argument("example: n must be a positive integer");
    if (!(lambda > 0.0) || !(lambda < n))
        throw std::invalid_argument("example: lambda must lie in (0, n)");
    const Pmf q = convolve_n(make_binomial(1, lambda / n), n);

    ExampleRow row;
    row.params["n"] = n;
    row.params["lambda"] = lambda;
    const BoundReport rep = tv_bound_k1(lambda, q);
    row.tv_exact = rep.distance_exact;
    row.k1 = rep.info_value;
    row.k1_bound = rep.bound_value;
    row.error_term = rep.error_term;
    row.khj_reference = 2.0 * lambda / n;

    const double closed = lambda * lambda / (n * (n - lambda));
    if (std::abs(row.k1 / closed - 1.0) > 1e-10)
        throw std::logic_error("example: convolution K1 disagrees with the closed form");

    // Exposes how the exact error term tracks its expected order
    // lambda^n / n^(n+1).
    const double order_log = n * std::log(lambda) - (n + 1) * std::log(static_cast<double>(n));
    row.params["err_order_ratio"] =
        row.error_term > 0.0 ? std::exp(std::log(row.error_term) - order_log) : 0.0;
    return row;
}

}  // namespace

ExampleRow ex1_bernoulli(int n, double lambda) { return bernoulli_sum_row(n, lambda); }

ExampleRow ex2_mu_sqrt_n(int n, double mu) {
    if (n < 1) throw std::invalid_argument("example: n must be a positive integer");
    const double sqn = std::sqrt(static_cast<double>(n));
    if (!(mu > 0.0) || !(mu < sqn))
        throw std::invalid_argument("example: mu must lie in (0, sqrt(n))");
    ExampleRow row = bernoulli_sum_row(n, mu * sqn);
    row.params["mu"] = mu;
    row.params["dp86_const"] = std::sqrt(1.0 / (2.0 * M_PI * std::exp(1.0)));
    return row;
}

ExampleRow ex3_geometric(int n, double lambda) {
    if (n < 1) throw std::invalid_argument("example: n must be a positive integer");
    if (!(lambda > 0.0)) throw std::invalid_argument("example: lambda must be positive");
    const double qi = n / (n + lambda);
    const Pmf q = convolve_n(make_geometric(qi, 1e-13), n);

    ExampleRow row;
    row.params["n"] = n;
    row.params["lambda"] = lambda;
    row.params["q_i"] = qi;
    row.params["mean_q"] = mean(q);  // should sit at lambda up to truncation

    const Pmf p = make_poisson_covering(lambda, 1e-14, q.upper() + 2);
    row.tv_exact = tv_distance(p, q);
    row.k1 = k1_scaled_fisher(lambda, q);
    const double k1_sub = k1_subadditive_bound(lambda, std::vector<double>(static_cast<std::size_t>(n), qi));
    row.params["k1_subadditive"] = k1_sub;
    // Bound route through the subadditive K1 value.
    row.k1_bound = std::sqrt(2.0 / (lambda * std::exp(1.0))) * std::sqrt(lambda * k1_sub);
    row.error_term = 0.0;  // the geometric sum has full support, e_N vanishes
    row.khj_reference = std::sqrt(2.0 * row.k1);

    row.k2 = k2_discrete_fisher(lambda, q);
    row.k2_bound = stein_magic_H(lambda) * std::sqrt(*row.k2);
    row.better_bound = *row.k2_bound < row.k1_bound ? "k2" : "k1";
    return row;
}

std::string example_csv_header() {
    return "n,lambda,mu,tv,k1,k1_bound,k2,k2_bound,khj_ref,error_term,better_bound";
}

std::string example_csv_row(const ExampleRow& row) {
    auto get = [&row](const char* key) -> std::string {
        auto it = row.params.find(key);
        return it == row.params.end() ? std::string() : fmt(it->second);
    };
    std::string out;
    out += get("n");
    out += ',';
    out += get("lambda");
    out += ',';
    out += get("mu");
    out += ',';
    out += fmt(row.tv_exact);
    out += ',';
    out += fmt(row.k1);
    out += ',';
    out += fmt(row.k1_bound);
    out += ',';
    out += row.k2 ? fmt(*row.k2) : std::string();
    out += ',';
    out += row.k2_bound ? fmt(*row.k2_bound) : std::string();
    out += ',';
    out += fmt(row.khj_reference);
    out += ',';
    out += fmt(row.error_term);
    out += ',';
    out += row.better_bound;
    return out;
}

}  // namespace steininfo
