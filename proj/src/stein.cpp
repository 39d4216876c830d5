#include "steininfo/stein.hpp"

#include <cmath>
#include <stdexcept>

#include "steininfo/summation.hpp"

namespace steininfo {

namespace {

// Suffix sums R(x) = sum_{k=x}^{upper} (l(k) - el) p(k), indexed from the
// window start; R(upper + 1) = 0. Accumulated backward with compensation so
// that R(x) keeps full relative accuracy where the mass is tiny.
std::vector<double> suffix_sums(const Pmf& p, const LatticeFunction& l, double el) {
    const int n = p.size();
    std::vector<double> r(static_cast<std::size_t>(n) + 1);
    r[static_cast<std::size_t>(n)] = 0.0;
    StableSum s;
    for (int i = n - 1; i >= 0; --i) {
        const int x = p.a() + i;
        s.add((l(x) - el) * p.prob(x));
        r[static_cast<std::size_t>(i)] = s.value();
    }
    return r;
}

}  // namespace

TestFunction make_f1(LatticeFunction fn, const Pmf& p) {
    if (fn(p.a()) != 0.0)
        throw std::invalid_argument("test function: class F1 requires f(a) = 0");
    for (int x = p.a(); x <= p.upper(); ++x) {
        if (!std::isfinite(fn(x) * p.prob(x)))
            throw std::invalid_argument("test function: f*p not bounded on the support");
    }
    return TestFunction{std::move(fn), FunctionClass::f1};
}

TestFunction make_f2(LatticeFunction fn, const LatticeFunction& ptilde) {
    for (int x = ptilde.lo(); x <= ptilde.hi(); ++x) {
        if (!std::isfinite(fn(x) * ptilde(x)))
            throw std::invalid_argument("test function: f*ptilde not bounded on the support");
    }
    return TestFunction{std::move(fn), FunctionClass::f2};
}

double t1_apply(const TestFunction& f, const Pmf& p, int x) {
    if (!p.contains(x)) return 0.0;
    return f(x + 1) * p.forward_ratio(x) - f(x);
}

double t2_apply(const TestFunction& f, const Pmf& p, const LatticeFunction& ptilde, int x) {
    if (!p.contains(x)) return 0.0;
    return (f(x + 1) * ptilde(x + 1) - f(x) * ptilde(x)) / p.prob(x);
}

TestFunction canonical_f_z(const Pmf& p, int z) {
    const double pz = cdf(p, z);
    const LatticeFunction lz = LatticeFunction::indicator_leq(z, p.a(), p.upper());
    // sum over the whole window of l_z * p telescopes to P(X<=z) * tail.
    const auto r = suffix_sums(p, lz, pz);
    const double total = pz * p.tail_mass();

    const int n = p.size();
    std::vector<double> vals(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i < n; ++i)
        vals[static_cast<std::size_t>(i)] = (total - r[static_cast<std::size_t>(i)]) / p.prob(p.a() + i);
    const double rho = p.forward_ratio(p.upper());
    if (rho > 0.0)
        vals[static_cast<std::size_t>(n)] = total / (p.prob(p.upper()) * rho);
    return TestFunction{LatticeFunction(p.a(), std::move(vals)), FunctionClass::f1};
}

TestFunction stein_solution_1(const Pmf& p, const LatticeFunction& l) {
    const double el = expectation(p, l);
    const auto r = suffix_sums(p, l, el);
    const double total = el * p.tail_mass();

    const int n = p.size();
    std::vector<double> vals(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i < n; ++i)
        vals[static_cast<std::size_t>(i)] = (total - r[static_cast<std::size_t>(i)]) / p.prob(p.a() + i);
    const double rho = p.forward_ratio(p.upper());
    if (rho > 0.0)
        vals[static_cast<std::size_t>(n)] = total / (p.prob(p.upper()) * rho);
    return TestFunction{LatticeFunction(p.a(), std::move(vals)), FunctionClass::f1};
}

LatticeFunction p_tilde(const ParametricFamily& fam, double theta, double tail_tol) {
    if (!(theta > fam.theta_lo) || !(theta < fam.theta_hi))
        throw std::invalid_argument("p_tilde: theta must be interior to the parameter domain");
    const Pmf base = fam.pmf_at(theta, tail_tol);
    const int hi = base.upper() + 1;
    if (fam.dpmf_dtheta) {
        LatticeFunction d = fam.dpmf_dtheta(theta, hi);
        if (d(base.a()) != 0.0)
            throw std::invalid_argument("p_tilde: closed form must vanish at the support start");
        return d;
    }
    // Central difference on theta -> p_theta(x)/p_theta(a); the ratios are
    // formed in log space. Step per the usual cube-root-of-eps rule.
    const double h = std::cbrt(2.220446049250313e-16) * std::max(1.0, std::abs(theta));
    if (!(theta - h > fam.theta_lo) || !(theta + h < fam.theta_hi))
        throw std::invalid_argument("p_tilde: theta too close to the domain boundary");
    const Pmf up = fam.pmf_at(theta + h, tail_tol * 1e-2);
    const Pmf dn = fam.pmf_at(theta - h, tail_tol * 1e-2);
    if (up.a() != base.a() || dn.a() != base.a())
        throw std::invalid_argument("p_tilde: family support must not depend on theta");
    std::vector<double> vals(static_cast<std::size_t>(hi - base.a()) + 1, 0.0);
    for (int x = base.a() + 1; x <= hi; ++x) {
        const double ru = up.contains(x) ? std::exp(up.log_prob(x) - up.log_prob(up.a())) : 0.0;
        const double rd = dn.contains(x) ? std::exp(dn.log_prob(x) - dn.log_prob(dn.a())) : 0.0;
        vals[static_cast<std::size_t>(x - base.a())] = (ru - rd) / (2.0 * h);
    }
    return LatticeFunction(base.a(), std::move(vals));
}

ParametricFamily poisson_family() {
    ParametricFamily fam;
    fam.pmf_at = [](double theta, double tol) { return make_poisson(theta, tol); };
    fam.dpmf_dtheta = [](double theta, int hi) { return poisson_ptilde(theta, hi); };
    fam.theta_lo = 0.0;
    fam.theta_hi = 1e308;
    return fam;
}

LatticeFunction poisson_ptilde(double lambda, int hi) {
    if (!(lambda > 0.0)) throw std::invalid_argument("poisson_ptilde: lambda must be positive");
    std::vector<double> vals(static_cast<std::size_t>(hi) + 1, 0.0);
    const double ll = std::log(lambda);
    for (int x = 1; x <= hi; ++x)
        vals[static_cast<std::size_t>(x)] = std::exp((x - 1) * ll - std::lgamma(static_cast<double>(x)));
    return LatticeFunction(0, std::move(vals));
}

TestFunction stein_solution_2(const Pmf& p, const LatticeFunction& ptilde,
                              const LatticeFunction& l) {
    const int n = p.size();
    for (int x = p.a() + 1; x <= p.upper() + 1; ++x) {
        if (ptilde(x) == 0.0)
            throw std::domain_error("stein_solution_2: ptilde vanishes above the support start");
    }
    const double el = expectation(p, l);
    const auto r = suffix_sums(p, l, el);
    const double total = el * p.tail_mass();

    std::vector<double> vals(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i) {
        const double num = total - (i < n ? r[static_cast<std::size_t>(i)] : 0.0);
        vals[static_cast<std::size_t>(i)] = num / ptilde(p.a() + i);
    }
    return TestFunction{LatticeFunction(p.a(), std::move(vals)), FunctionClass::f2};
}

double characterization_residual(const Pmf& p, const Pmf& x_law,
                                 const std::vector<TestFunction>& fs) {
    if (fs.empty())
        throw std::invalid_argument("characterization: test family must be nonempty");
    double worst = 0.0;
    for (const auto& f : fs) {
        if (f.cls != FunctionClass::f1)
            throw std::invalid_argument("characterization: all test functions must be class F1");
        StableSum s;
        for (int x = x_law.a(); x <= x_law.upper(); ++x)
            s.add(x_law.prob(x) * t1_apply(f, p, x));
        const double v = std::abs(s.value());
        if (v > worst) worst = v;
    }
    return worst;
}

}  // namespace steininfo
