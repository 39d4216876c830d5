#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "steininfo/lattice_function.hpp"

namespace steininfo {

// Contiguous integer support [lower, upper], upper absent meaning infinite.
// Laws require lower < upper; a single-point support is allowed only for the
// convolution identity (point mass).
struct Support {
    int lower = 0;
    std::optional<int> upper;
};

// Discrete probability mass function on a contiguous integer window
// [a, a + probs.size() - 1], strictly positive there. A law with infinite
// support is stored as its truncation; the dropped mass is kept in
// tail_mass and is never folded back by renormalisation, so every error
// term of the truncated object stays computable as written.
//
// Values are immutable after construction; all operations on Pmf are pure.
class Pmf {
public:
    using RatioFn = std::function<double(int)>;

    // Validates positivity, mass conservation (|sum + tail - 1| <= 1e-12)
    // and consistency of the data. `infinite_support` marks truncations of
    // laws with support unbounded above.
    static Pmf from_values(int a, std::vector<double> probs, double tail_mass,
                           std::string label, bool infinite_support = false);

    int a() const { return a_; }
    // Last stored point (the truncation point N for infinite laws).
    int upper() const { return a_ + static_cast<int>(probs_.size()) - 1; }
    int size() const { return static_cast<int>(probs_.size()); }

    Support support() const {
        if (infinite_) return Support{a_, std::nullopt};
        return Support{a_, upper()};
    }

    bool contains(int x) const { return x >= a_ && x <= upper(); }

    double prob(int x) const { return contains(x) ? probs_[static_cast<std::size_t>(x - a_)] : 0.0; }
    double log_prob(int x) const;

    // p(x+1)/p(x). Inside the window this is exp(log p(x+1) - log p(x)).
    // At the truncation point it is the family's analytic ratio when the
    // constructor supplied one, and 0 otherwise (matching a genuinely
    // finite support). Outside the window it is 0.
    double forward_ratio(int x) const;
    bool has_analytic_ratio() const { return static_cast<bool>(analytic_ratio_); }

    double tail_mass() const { return tail_mass_; }
    bool infinite_support() const { return infinite_; }
    const std::string& label() const { return label_; }

    const std::vector<double>& probs() const { return probs_; }
    const std::vector<double>& log_probs() const { return log_probs_; }

private:
    friend Pmf make_poisson(double, double);
    friend Pmf make_poisson_covering(double, double, int);
    friend Pmf make_geometric(double, double);

    Pmf() = default;
    void validate() const;

    int a_ = 0;
    std::vector<double> probs_;
    std::vector<double> log_probs_;
    double tail_mass_ = 0.0;
    bool infinite_ = false;
    std::string label_;
    RatioFn analytic_ratio_;  // empty unless a family constructor attached one
};

// Mean-lambda Poisson truncated at the smallest N whose dropped tail mass is
// below tail_tol. probs are produced in log space; tail_mass is recorded as
// 1 - sum(probs), never renormalised away.
Pmf make_poisson(double lambda, double tail_tol);

// Same law, but the window is extended to cover at least [0, min_upper].
// Cross-support operations (scores, Stein solutions against a wider q) need
// the Poisson window to dominate the other support. The window is capped
// where exp(log p) would underflow to zero.
Pmf make_poisson_covering(double lambda, double tail_tol, int min_upper);

// Binomial(n, p) on [0, n]; tail_mass is exactly 0.
Pmf make_binomial(int n, double p);

// Geometric with success probability q, P(x) = (1-q)^x q on {0,1,...},
// truncated at the smallest N with (1-q)^(N+1) < tail_tol; tail_mass is
// recorded as (1-q)^(N+1). Mean of the untruncated law is (1-q)/q.
Pmf make_geometric(double q, double tail_tol);

// Point mass at x >= 0; the neutral element of convolution.
Pmf make_point_mass(int x);

// Discrete convolution. Both inputs must have a >= 0. Entries that
// underflow to zero at the far end are dropped into the tail mass so that
// stored probabilities stay strictly positive.
Pmf convolve(const Pmf& p1, const Pmf& p2);

// n-fold convolution power; equals repeated convolve. n = 0 yields the
// point mass at 0 (neutral element), n < 0 is a parameter error.
Pmf convolve_n(const Pmf& p, int n);

// sum_x l(x) p(x) over the stored window, compensated.
double expectation(const Pmf& p, const LatticeFunction& l);

double mean(const Pmf& p);

// P(X <= z) of the truncated object: 0 below the window, 1 - tail_mass at
// and beyond the truncation point.
double cdf(const Pmf& p, int z);

}  // namespace steininfo
