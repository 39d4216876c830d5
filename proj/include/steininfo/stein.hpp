#pragma once

#include <functional>
#include <vector>

#include "steininfo/lattice_function.hpp"
#include "steininfo/pmf.hpp"

namespace steininfo {

// Test-function classes of the two characterizations. F1 requires f(a) = 0
// with f*p bounded on the support; F2 only requires f*ptilde bounded (the
// vanishing condition can be dropped because ptilde(a) = 0).
enum class FunctionClass { f1, f2, unconstrained };

struct TestFunction {
    LatticeFunction fn;
    FunctionClass cls = FunctionClass::unconstrained;

    double operator()(int x) const { return fn(x); }
};

// Validates the F1 membership conditions of `fn` against `p` and tags it.
TestFunction make_f1(LatticeFunction fn, const Pmf& p);

// Tags for the parametric class; only finiteness of f*ptilde is checked.
TestFunction make_f2(LatticeFunction fn, const LatticeFunction& ptilde);

// Forward-difference operator of the density approach,
//   T1(f,p)(x) = (f(x+1) p(x+1) - f(x) p(x)) / p(x)
// on the support and 0 outside. p(N+1)/p(N) at the truncation point comes
// from the pmf's analytic family ratio when present, else 0.
double t1_apply(const TestFunction& f, const Pmf& p, int x);

// The characterizing family from the density approach: f_z solves
// T1(f_z, p) = l_z with l_z(k) = (1{k <= z} - P_p(X <= z)) on the support.
// f_z(a) = 0 and the returned function is tagged F1.
TestFunction canonical_f_z(const Pmf& p, int z);

// Solution of T1(f, p) = l - E_p[l] with f(a) = 0, on the window
// [a, upper + 1]. Partial sums are accumulated from the tail (suffix form)
// so the division by p(x) stays accurate deep into the truncated region.
TestFunction stein_solution_1(const Pmf& p, const LatticeFunction& l);

// theta-indexed family with common support; pmf_at produces the law at a
// given parameter and truncation tolerance. dpmf_dtheta, when set, returns
// the closed-form derivative of p_theta(x)/p_theta(a) on [a, hi]; otherwise
// p_tilde falls back to central finite differences.
struct ParametricFamily {
    std::function<Pmf(double theta, double tail_tol)> pmf_at;
    std::function<LatticeFunction(double theta, int hi)> dpmf_dtheta;
    double theta_lo = 0.0;
    double theta_hi = 0.0;
};

// ptilde(x) = d/dtheta [p_theta(x) / p_theta(a)] on [a, upper + 1];
// ptilde(a) = 0 always. theta must be interior to the family's domain.
LatticeFunction p_tilde(const ParametricFamily& fam, double theta, double tail_tol);

// Ready-made Poisson family (theta = lambda) with the closed-form
// derivative lambda^(x-1)/(x-1)! for x >= 1.
ParametricFamily poisson_family();

// Closed-form Poisson ptilde on [0, hi] without going through a family.
LatticeFunction poisson_ptilde(double lambda, int hi);

// Parametric operator T2(f,p)(x) = (f(x+1) pt(x+1) - f(x) pt(x)) / p(x) on
// the support, 0 outside.
double t2_apply(const TestFunction& f, const Pmf& p, const LatticeFunction& ptilde, int x);

// Solution of T2(f, p) = l - E_p[l]; requires ptilde nonzero on
// [a+1, upper+1]. The value at x = a is set to 0 (it is only ever
// multiplied by ptilde(a) = 0).
TestFunction stein_solution_2(const Pmf& p, const LatticeFunction& ptilde,
                              const LatticeFunction& l);

// max over the supplied F1 test functions of |E_xlaw[T1(f, p)(X)]|.
// Vanishes when x_law = p; over the canonical f_z family a nonzero value
// detects x_law | S_p != p.
double characterization_residual(const Pmf& p, const Pmf& x_law,
                                 const std::vector<TestFunction>& fs);

}  // namespace steininfo
