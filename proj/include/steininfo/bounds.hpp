#pragma once

#include <string>
#include <vector>

#include "steininfo/pmf.hpp"
#include "steininfo/stein.hpp"

namespace steininfo {

// One evaluated total-variation inequality.
struct BoundReport {
    double distance_exact = 0.0;
    double info_value = 0.0;
    double magic_constant = 0.0;
    double error_term = 0.0;
    double bound_value = 0.0;  // magic * sqrt(info) + error_term
    double slack = 0.0;        // bound_value - distance_exact
    bool holds = false;        // slack >= -1e-12
    std::string kind;          // "K1" or "K2"
};

// Half L1 distance over the union window. Mass truncated away from either
// law is counted as pure discrepancy (half of each tail), which makes
// bound checks conservative.
double tv_distance(const Pmf& p, const Pmf& q);

// The sign function h = 2*1[p(x) <= q(x)] - 1 on the union window (ties
// get +1). Satisfies (E_q[h] - E_p[h])/2 = half the L1 distance.
LatticeFunction optimal_tv_test_function(const Pmf& p, const Pmf& q);

// sup over the supplied finite class of |E_q[h] - E_p[h]|; a lower bound
// for the sup over any infinite class containing it.
double d_H(const Pmf& p, const Pmf& q, const std::vector<LatticeFunction>& hs);

// Stein magic factor H(lambda) = min(1, sqrt(2/(e lambda))).
double stein_magic_H(double lambda);

struct SteinFactorBound {
    double sup_value = 0.0;  // evaluated sup of the weighted solution
    double cap = 0.0;        // H(lambda) * (sup h - inf h)
};

// sup_{x <= window} |f_{1,h}(x+1)/(x+1)| for the Poisson(lambda) solution,
// evaluated directly, together with the cap it must respect. The solution
// here tracks the untruncated law: it is built from suffix sums only, so
// the window-boundary bookkeeping term of the truncated object (which is
// an artifact of truncation, not part of the norm being bounded) drops out.
SteinFactorBound stein_factor_sup_1(double lambda, const LatticeFunction& h, int window);

// Same for the scaled second solution e^lambda f_{2,h}(x) / lambda.
SteinFactorBound stein_factor_sup_2(double lambda, const LatticeFunction& h, int window);

// TV(Po(lambda), q) <= sqrt(lambda) H(lambda) sqrt(K1) + e_N, with e_N the
// exact boundary term of the expectation identity at the optimal TV test
// function (not just its order).
BoundReport tv_bound_k1(double lambda, const Pmf& q, double tail_tol = 1e-14);

// TV(Po(lambda), q) <= H(lambda) sqrt(K2); only valid for full-support q,
// finite supports are rejected.
BoundReport tv_bound_k2(double lambda, const Pmf& q, double tail_tol = 1e-14);

// Finite-class constant of the first Hoelder inequality:
//   sup_h ( sqrt(E_q[(sqrt(lambda) f_{1,h}(X+1)/(X+1))^2]) + |e_N(h)|/sqrt(K1) ).
// When K1 vanishes the second summand is dropped.
double h1_constant(double lambda, const Pmf& q, const std::vector<LatticeFunction>& hs,
                   double tail_tol = 1e-14);

// Finite-class constant of the second Hoelder inequality:
//   sqrt( sup_h E_q[(e^lambda f_{2,h}(X) / lambda)^2] ).
double h2_constant(double lambda, const Pmf& q, const std::vector<LatticeFunction>& hs,
                   double tail_tol = 1e-14);

}  // namespace steininfo
