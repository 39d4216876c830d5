#include "steininfo/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "steininfo/score_info.hpp"
#include "steininfo/summation.hpp"

namespace steininfo {

namespace {

constexpr double kHoldsTol = 1e-12;

// Suffix sums of (h - E_p[h]) p over the window of p, R[i] for x = a + i,
// with one extra zero entry at the top.
std::vector<double> suffix_sums(const Pmf& p, const LatticeFunction& h, double eh) {
    const int n = p.size();
    std::vector<double> r(static_cast<std::size_t>(n) + 1, 0.0);
    StableSum s;
    for (int i = n - 1; i >= 0; --i) {
        const int x = p.a() + i;
        s.add((h(x) - eh) * p.prob(x));
        r[static_cast<std::size_t>(i)] = s.value();
    }
    return r;
}

// |q(N) f_{1,h}(N+1) p(N+1)/p(N)|, the exact expectation-identity boundary
// term. When the Poisson window cannot be extended past q's (double range),
// the uniform cap |f(x)| <= H(lambda) range x gives a rigorous stand-in.
double exact_error_term(double lambda, const Pmf& p, const Pmf& q, const LatticeFunction& h) {
    const int nq = q.upper();
    if (nq + 1 <= p.upper()) {
        const TestFunction f = stein_solution_1(p, h);
        return std::abs(q.prob(nq) * f(nq + 1) * p.forward_ratio(nq));
    }
    const auto [mn, mx] = h.range_over_z();
    return q.prob(nq) * lambda * stein_magic_H(lambda) * (mx - mn);
}

}  // namespace

double tv_distance(const Pmf& p, const Pmf& q) {
    const int lo = std::min(p.a(), q.a());
    const int hi = std::max(p.upper(), q.upper());
    StableSum s;
    for (int x = lo; x <= hi; ++x) s.add(std::abs(p.prob(x) - q.prob(x)));
    s.add(p.tail_mass());
    s.add(q.tail_mass());
    return 0.5 * s.value();
}

LatticeFunction optimal_tv_test_function(const Pmf& p, const Pmf& q) {
    const int lo = std::min(p.a(), q.a());
    const int hi = std::max(p.upper(), q.upper());
    std::vector<double> vals(static_cast<std::size_t>(hi - lo + 1));
    for (int x = lo; x <= hi; ++x)
        vals[static_cast<std::size_t>(x - lo)] = p.prob(x) <= q.prob(x) ? 1.0 : -1.0;
    return LatticeFunction(lo, std::move(vals));
}

double d_H(const Pmf& p, const Pmf& q, const std::vector<LatticeFunction>& hs) {
    if (hs.empty()) throw std::invalid_argument("d_H: test class must be nonempty");
    double worst = 0.0;
    for (const auto& h : hs)
        worst = std::max(worst, std::abs(expectation(q, h) - expectation(p, h)));
    return worst;
}

double stein_magic_H(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("stein_magic_H: lambda must be positive");
    return std::min(1.0, std::sqrt(2.0 / (std::exp(1.0) * lambda)));
}

SteinFactorBound stein_factor_sup_1(double lambda, const LatticeFunction& h, int window) {
    const Pmf p = make_poisson_covering(lambda, 1e-14, window + 2);
    const double eh = expectation(p, h);
    const auto r = suffix_sums(p, h, eh);
    SteinFactorBound out;
    const int top = std::min(window, p.upper() - 1);
    for (int x = 0; x <= top; ++x) {
        // f(x+1) = sum_{k<=x}(h - eh) p(k) / p(x+1) = -R(x+1)/p(x+1).
        const double v = std::abs(r[static_cast<std::size_t>(x + 1)] / p.prob(x + 1)) / (x + 1);
        if (v > out.sup_value) out.sup_value = v;
    }
    const auto [mn, mx] = h.range_over_z();
    out.cap = stein_magic_H(lambda) * (mx - mn);
    return out;
}

SteinFactorBound stein_factor_sup_2(double lambda, const LatticeFunction& h, int window) {
    const Pmf p = make_poisson_covering(lambda, 1e-14, window + 2);
    const double eh = expectation(p, h);
    const auto r = suffix_sums(p, h, eh);
    const double ll = std::log(lambda);
    SteinFactorBound out;
    const int top = std::min(window, p.upper());
    for (int x = 1; x <= top; ++x) {
        // e^l f_2(x) / l = -R(x) * e^l / (l * ptilde(x)), in log form.
        const double w = std::exp(lambda - (x - 1) * ll + std::lgamma(static_cast<double>(x))) / lambda;
        const double v = std::abs(r[static_cast<std::size_t>(x)]) * w;
        if (v > out.sup_value) out.sup_value = v;
    }
    const auto [mn, mx] = h.range_over_z();
    out.cap = stein_magic_H(lambda) * (mx - mn);
    return out;
}

BoundReport tv_bound_k1(double lambda, const Pmf& q, double tail_tol) {
    if (q.a() != 0) throw std::domain_error("tv_bound_k1: q must be supported in N");
    const Pmf p = make_poisson_covering(lambda, tail_tol, q.upper() + 2);
    BoundReport rep;
    rep.kind = "K1";
    rep.distance_exact = tv_distance(p, q);
    rep.info_value = k1_scaled_fisher(lambda, q);
    rep.magic_constant = std::sqrt(lambda) * stein_magic_H(lambda);
    rep.error_term = exact_error_term(lambda, p, q, optimal_tv_test_function(p, q));
    rep.bound_value = rep.magic_constant * std::sqrt(rep.info_value) + rep.error_term;
    rep.slack = rep.bound_value - rep.distance_exact;
    rep.holds = rep.slack >= -kHoldsTol;
    return rep;
}

BoundReport tv_bound_k2(double lambda, const Pmf& q, double tail_tol) {
    if (q.a() != 0) throw std::domain_error("tv_bound_k2: q must be supported in N");
    if (!q.infinite_support())
        throw std::domain_error("tv_bound_k2: K2 bound requires full support (N = infinity)");
    const Pmf p = make_poisson_covering(lambda, tail_tol, q.upper() + 2);
    BoundReport rep;
    rep.kind = "K2";
    rep.distance_exact = tv_distance(p, q);
    rep.info_value = k2_discrete_fisher(lambda, q);
    rep.magic_constant = stein_magic_H(lambda);
    rep.error_term = 0.0;
    rep.bound_value = rep.magic_constant * std::sqrt(rep.info_value);
    rep.slack = rep.bound_value - rep.distance_exact;
    rep.holds = rep.slack >= -kHoldsTol;
    return rep;
}

double h1_constant(double lambda, const Pmf& q, const std::vector<LatticeFunction>& hs,
                   double tail_tol) {
    if (hs.empty()) throw std::invalid_argument("h1_constant: test class must be nonempty");
    if (q.a() != 0) throw std::domain_error("h1_constant: q must be supported in N");
    const Pmf p = make_poisson_covering(lambda, tail_tol, q.upper() + 2);
    if (q.upper() + 1 > p.upper())
        throw std::domain_error("h1_constant: q window exceeds the representable Poisson window");
    const double k1 = k1_scaled_fisher(lambda, q);
    double worst = 0.0;
    for (const auto& h : hs) {
        const TestFunction f = stein_solution_1(p, h);
        StableSum sq;
        for (int x = 0; x <= q.upper(); ++x) {
            const double w = std::sqrt(lambda) * f(x + 1) / (x + 1);
            sq.add(q.prob(x) * w * w);
        }
        double val = std::sqrt(sq.value());
        const double err = std::abs(q.prob(q.upper()) * f(q.upper() + 1) * p.forward_ratio(q.upper()));
        if (k1 > 1e-24) val += err / std::sqrt(k1);
        worst = std::max(worst, val);
    }
    return worst;
}

double h2_constant(double lambda, const Pmf& q, const std::vector<LatticeFunction>& hs,
                   double tail_tol) {
    if (hs.empty()) throw std::invalid_argument("h2_constant: test class must be nonempty");
    if (q.a() != 0) throw std::domain_error("h2_constant: q must be supported in N");
    if (!q.infinite_support())
        throw std::domain_error("h2_constant: q must be a truncation of a full-support law");
    const Pmf p = make_poisson_covering(lambda, tail_tol, q.upper() + 2);
    if (q.upper() + 1 > p.upper())
        throw std::domain_error("h2_constant: q window exceeds the representable Poisson window");
    const LatticeFunction pt = poisson_ptilde(lambda, p.upper() + 1);
    const double scale = std::exp(lambda) / lambda;
    double worst = 0.0;
    for (const auto& h : hs) {
        const TestFunction f = stein_solution_2(p, pt, h);
        StableSum sq;
        for (int x = 0; x <= q.upper(); ++x) {
            const double w = scale * f(x);
            sq.add(q.prob(x) * w * w);
        }
        worst = std::max(worst, sq.value());
    }
    return std::sqrt(worst);
}

}  // namespace steininfo
