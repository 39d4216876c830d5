#pragma once

#include <vector>

#include "steininfo/pmf.hpp"
#include "steininfo/stein.hpp"

namespace steininfo {

// Values of a generalized score function r1 or r2 on [0, N].
struct ScoreField {
    enum class Kind { r1, r2 };
    Kind kind = Kind::r1;
    LatticeFunction values;

    double operator()(int x) const { return values(x); }
};

// One evaluated factorization identity: lhs = E_q[l] - E_p[l], the
// score-weighted main term, the boundary error term, and what is left.
struct IdentityReport {
    double lhs = 0.0;
    double main_term = 0.0;
    double error_term = 0.0;
    double residual = 0.0;
};

// r1(p,q)(x) = p(x+1)/p(x) - q(x+1)/q(x) on [0, N] where [0, N] is q's
// window. The forward ratio at N is 0 for genuinely finite q and the
// analytic family ratio for truncations. Requires S_q inside S_p, both
// starting at 0.
ScoreField r1_score(const Pmf& p, const Pmf& q);

// r2(p,q)(x) = pt(x+1)/p(x) * q(x-1)/q(x) - pt(x)/p(x) on [0, N]; q(-1) = 0
// so the first term vanishes at x = 0. q must be a full-support truncation.
ScoreField r2_score(const Pmf& p, const LatticeFunction& ptilde, const Pmf& q);

// Scaled Fisher information
//   K1 = lambda E_q[((X+1) q(X+1) / (lambda q(X)) - 1)^2].
double k1_scaled_fisher(double lambda, const Pmf& q);

// Discrete (Katti-Panjer) Fisher information
//   K2 = E_q[(lambda q(X-1)/q(X) - X)^2],
// summed directly so no e^lambda factor is ever materialized.
double k2_discrete_fisher(double lambda, const Pmf& q);

// I(q) = E_q[(q(X-1)/q(X) - 1)^2].
double jm_fisher_information(const Pmf& q);

// Pointwise check of the factorization
//   T1(f,p) = T1(f,q) + f(.+1) r1(p,q) + e
// where e carries the part of T1(f,p) living beyond q's support. Returns
// the max absolute residual over the union window; the identity is
// algebraic, so anything above roundoff indicates a defect.
double factorization_check_1(const TestFunction& f, const Pmf& p, const Pmf& q);

// E_q[l] - E_p[l] = E_q[f1(X+1) r1(X)] + q(N) f1(N+1) p(N+1)/p(N).
// The boundary x = N of the expectation is exactly the reported error
// term, so the main term sums x < N; counting it twice would double the
// boundary contribution.
IdentityReport identity_check_1(const Pmf& p, const Pmf& q, const LatticeFunction& l);

// E_q[l] - E_p[l] = E_q[f2(X) r2(X)] with no error term. Only valid when
// pt(x+1)/p(x) is constant on the support (checked to relative 1e-10;
// Poisson gives e^lambda), and only for full-support q.
IdentityReport identity_check_2(const Pmf& p, const LatticeFunction& ptilde,
                                const Pmf& q, const LatticeFunction& l);

// Subadditivity bound for a sum of independent geometrics with success
// probabilities q_params: (1/lambda) sum (1-q_i)^3 / q_i^2. Requires
// lambda = sum (1-q_i)/q_i to 1e-10.
double k1_subadditive_bound(double lambda, const std::vector<double>& q_params);

}  // namespace steininfo
