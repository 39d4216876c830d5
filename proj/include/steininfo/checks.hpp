#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "steininfo/lattice_function.hpp"
#include "steininfo/pmf.hpp"

namespace steininfo {

// Deterministic generator for the randomized suites. Raw mt19937_64 output
// is mapped to doubles directly so sequences do not depend on library
// distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

// Strictly positive normalized pmf on [0, upper].
Pmf random_pmf(Rng& rng, int upper);

// Values uniform in [-amp, amp] on [lo, hi].
LatticeFunction random_function(Rng& rng, int lo, int hi, double amp = 1.0);

struct CheckResult {
    std::string name;
    int instances = 0;
    double worst = 0.0;  // worst residual or deviation seen
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// E_p[T1(f,p)] over random bounded f with f(0) = 0, Poisson targets.
CheckResult check_zero_mean_t1(std::uint64_t seed, const std::vector<double>& lambdas,
                               int per_lambda, double tol);

// E_p[T2(f,p)] over random bounded f (no vanishing condition), with the
// parametric derivative produced through the family fallback machinery.
CheckResult check_zero_mean_t2(std::uint64_t seed, const std::vector<double>& lambdas,
                               int per_lambda, double tol);

// Random distinct pairs on [0, upper]: the canonical-family residual must
// match the cdf-difference oracle and be strictly positive.
CheckResult check_detection(std::uint64_t seed, int pairs, int upper, double tol);

// Pointwise factorization residual, plus the negative control: dropping
// the beyond-support term must leave a residual above ablation_min.
CheckResult check_factorization(std::uint64_t seed, int instances, double tol,
                                double ablation_min);

// Expectation identity with the boundary error term, random finite q.
CheckResult check_identity_1(std::uint64_t seed, int instances, double tol);

// Error-free expectation identity for full-support q, Poisson targets.
CheckResult check_identity_2(std::uint64_t seed, int instances, double tol);

// Weighted Stein solutions stay below the magic-factor cap.
CheckResult check_factor_caps(std::uint64_t seed, const std::vector<double>& lambdas,
                              int per_lambda, int window, double tol);

// Finite-class Hoelder inequalities d_H <= H_i sqrt(K_i).
CheckResult check_hoelder(std::uint64_t seed, int instances, double tol);

}  // namespace steininfo
