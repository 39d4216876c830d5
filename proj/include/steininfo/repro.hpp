#pragma once

#include <map>
#include <optional>
#include <string>

#include "steininfo/pmf.hpp"

namespace steininfo {

// One row of the worked-example tables: exact distance, information
// values, the bounds built from them, and the literature reference
// constant the bound is compared against.
struct ExampleRow {
    std::map<std::string, double> params;
    double tv_exact = 0.0;
    double k1 = 0.0;
    double k1_bound = 0.0;
    double khj_reference = 0.0;
    double error_term = 0.0;
    std::optional<double> k2;
    std::optional<double> k2_bound;
    std::string better_bound;  // "k1" or "k2" when both bounds are present
};

// Sum of n i.i.d. Bernoulli(lambda/n) against Poisson(lambda). The
// binomial law is assembled by convolution (not the closed-form
// constructor) and its K1 is cross-checked against lambda^2/(n(n-lambda)).
// Also emits the ratio of the exact error term to lambda^n / n^(n+1), the
// order the error is expected to follow.
ExampleRow ex1_bernoulli(int n, double lambda);

// Same sum with lambda = mu sqrt(n); reports the optimal reference
// constant sqrt(1/(2 pi e)) alongside for context.
ExampleRow ex2_mu_sqrt_n(int n, double mu);

// Sum of n i.i.d. geometrics with q_i = n/(n+lambda): K1 both directly and
// through the subadditivity bound, K2 directly, and the two competing TV
// bounds with a flag recording which is smaller.
ExampleRow ex3_geometric(int n, double lambda);

std::string example_csv_header();
std::string example_csv_row(const ExampleRow& row);

}  // namespace steininfo
