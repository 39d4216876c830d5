#include "steininfo/checks.hpp"

#include <cmath>
#include <sstream>

#include "steininfo/bounds.hpp"
#include "steininfo/score_info.hpp"
#include "steininfo/stein.hpp"
#include "steininfo/summation.hpp"

namespace steininfo {

namespace {

std::string describe(const char* what, int index, double lambda, int upper) {
    std::ostringstream os;
    os << what << " instance " << index << " (lambda=" << lambda << ", upper=" << upper << ")";
    return os.str();
}

void record(CheckResult& res, bool bad, double value, const std::string& label) {
    ++res.instances;
    if (value > res.worst) res.worst = value;
    if (bad) res.violations.push_back(label + ": residual " + std::to_string(value));
}

}  // namespace

Pmf random_pmf(Rng& rng, int upper) {
    std::vector<double> v(static_cast<std::size_t>(upper) + 1);
    StableSum total;
    for (auto& x : v) {
        x = rng.uniform(0.05, 1.05);
        total.add(x);
    }
    const double t = total.value();
    for (auto& x : v) x /= t;
    return Pmf::from_values(0, std::move(v), 0.0, "random", false);
}

LatticeFunction random_function(Rng& rng, int lo, int hi, double amp) {
    std::vector<double> v(static_cast<std::size_t>(hi - lo) + 1);
    for (auto& x : v) x = rng.uniform(-amp, amp);
    return LatticeFunction(lo, std::move(v));
}

CheckResult check_zero_mean_t1(std::uint64_t seed, const std::vector<double>& lambdas,
                               int per_lambda, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "stein zero mean (T1)";
    for (double lambda : lambdas) {
        const Pmf p = make_poisson(lambda, 1e-14);
        for (int i = 0; i < per_lambda; ++i) {
            LatticeFunction fn = random_function(rng, 0, p.upper() + 1);
            std::vector<double> vals = fn.values();
            vals[0] = 0.0;  // class F1
            const TestFunction f = make_f1(LatticeFunction(0, std::move(vals)), p);
            const double r = characterization_residual(p, p, {f});
            record(res, r > tol, r, describe("zero-mean-t1", i, lambda, p.upper()));
        }
    }
    return res;
}

CheckResult check_zero_mean_t2(std::uint64_t seed, const std::vector<double>& lambdas,
                               int per_lambda, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "stein zero mean (T2)";
    for (double lambda : lambdas) {
        const Pmf p = make_poisson(lambda, 1e-14);
        const LatticeFunction pt = p_tilde(poisson_family(), lambda, 1e-14);
        for (int i = 0; i < per_lambda; ++i) {
            const TestFunction f = make_f2(random_function(rng, 0, p.upper() + 1), pt);
            StableSum s;
            for (int x = 0; x <= p.upper(); ++x) s.add(p.prob(x) * t2_apply(f, p, pt, x));
            const double r = std::abs(s.value());
            record(res, r > tol, r, describe("zero-mean-t2", i, lambda, p.upper()));
        }
    }
    return res;
}

CheckResult check_detection(std::uint64_t seed, int pairs, int upper, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "characterization detection";
    for (int i = 0; i < pairs; ++i) {
        const Pmf p = random_pmf(rng, upper);
        Pmf q = random_pmf(rng, upper);
        // Distinct pair wanted; the oracle below must come out positive.
        std::vector<TestFunction> fs;
        for (int z = 0; z < upper; ++z) fs.push_back(canonical_f_z(p, z));
        const double got = characterization_residual(p, q, fs);
        double oracle = 0.0;
        for (int z = 0; z < upper; ++z)
            oracle = std::max(oracle, std::abs(cdf(q, z) - cdf(p, z)));
        const double dev = std::abs(got - oracle);
        record(res, dev > tol || !(oracle > 0.0), dev,
               describe("detection", i, 0.0, upper));
    }
    return res;
}

CheckResult check_factorization(std::uint64_t seed, int instances, double tol,
                                double ablation_min) {
    Rng rng(seed);
    CheckResult res;
    res.name = "factorization identity";
    for (int i = 0; i < instances; ++i) {
        const double lambda = rng.uniform(0.3, 4.0);
        const int nq = rng.uniform_int(3, 10);
        const Pmf q = random_pmf(rng, nq);
        const Pmf p = make_poisson_covering(lambda, 1e-14, nq + 6);
        std::vector<double> vals(static_cast<std::size_t>(nq) + 4, 0.0);
        for (int x = 1; x <= nq; ++x) vals[static_cast<std::size_t>(x)] = rng.uniform(-1.0, 1.0);
        for (int x = nq + 1; x <= nq + 3; ++x) {
            // keep the beyond-support values away from zero so the ablation
            // control has something to detect
            const double sign = rng.uniform01() < 0.5 ? -1.0 : 1.0;
            vals[static_cast<std::size_t>(x)] = sign * rng.uniform(0.1, 1.0);
        }
        const TestFunction f = make_f1(LatticeFunction(0, std::move(vals)), p);

        const double r = factorization_check_1(f, p, q);
        const std::string label = describe("factorization", i, lambda, nq);
        record(res, r > tol, r, label);

        // Negative control: without the beyond-support term the identity
        // must visibly fail somewhere past q's window.
        const ScoreField r1 = r1_score(p, q);
        double ablated = 0.0;
        for (int x = 0; x <= nq + 4; ++x) {
            const double v =
                std::abs(t1_apply(f, p, x) - t1_apply(f, q, x) - f(x + 1) * r1(x));
            if (v > ablated) ablated = v;
        }
        if (ablated <= ablation_min)
            res.violations.push_back(label + ": ablation control too small " +
                                     std::to_string(ablated));
    }
    return res;
}

CheckResult check_identity_1(std::uint64_t seed, int instances, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "expectation identity (score r1)";
    for (int i = 0; i < instances; ++i) {
        const double lambda = rng.uniform(0.3, 4.0);
        const int nq = rng.uniform_int(3, 12);
        const Pmf q = random_pmf(rng, nq);
        const Pmf p = make_poisson_covering(lambda, 1e-14, nq + 4);
        const LatticeFunction l = random_function(rng, 0, p.upper());
        const IdentityReport rep = identity_check_1(p, q, l);
        record(res, std::abs(rep.residual) > tol, std::abs(rep.residual),
               describe("identity-r1", i, lambda, nq));
    }
    return res;
}

CheckResult check_identity_2(std::uint64_t seed, int instances, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "expectation identity (score r2)";
    for (int i = 0; i < instances; ++i) {
        const double lambda = rng.uniform(0.4, 3.0);
        Pmf q = make_geometric(rng.uniform(0.35, 0.8), 1e-13);
        const int shape = rng.uniform_int(0, 2);
        if (shape == 1) {
            q = make_poisson(rng.uniform(0.3, 2.0), 1e-13);
        } else if (shape == 2) {
            q = convolve(q, make_poisson(rng.uniform(0.2, 1.5), 1e-13));
        }
        const Pmf p = make_poisson_covering(lambda, 1e-14, q.upper() + 2);
        const LatticeFunction pt = poisson_ptilde(lambda, p.upper() + 1);
        const LatticeFunction l = random_function(rng, 0, q.upper() + 2);
        const IdentityReport rep = identity_check_2(p, pt, q, l);
        record(res, std::abs(rep.residual) > tol, std::abs(rep.residual),
               describe("identity-r2", i, lambda, q.upper()));
    }
    return res;
}

CheckResult check_factor_caps(std::uint64_t seed, const std::vector<double>& lambdas,
                              int per_lambda, int window, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "stein factor caps";
    for (double lambda : lambdas) {
        for (int i = 0; i < per_lambda; ++i) {
            // range exactly 2: rescale random values to span [-1, 1]
            LatticeFunction h = random_function(rng, 0, rng.uniform_int(8, 25));
            std::vector<double> v = h.values();
            double mn = v[0], mx = v[0];
            for (double x : v) {
                mn = std::min(mn, x);
                mx = std::max(mx, x);
            }
            for (auto& x : v) x = -1.0 + 2.0 * (x - mn) / (mx - mn);
            h = LatticeFunction(0, std::move(v));

            const SteinFactorBound b1 = stein_factor_sup_1(lambda, h, window);
            const SteinFactorBound b2 = stein_factor_sup_2(lambda, h, window);
            const std::string label = describe("factor-cap", i, lambda, window);
            record(res, b1.sup_value > b1.cap + tol, b1.sup_value, label + " [first solution]");
            if (b2.sup_value > b2.cap + tol)
                res.violations.push_back(label + " [second solution]: sup " +
                                         std::to_string(b2.sup_value) + " above cap " +
                                         std::to_string(b2.cap));
        }
    }
    return res;
}

CheckResult check_hoelder(std::uint64_t seed, int instances, double tol) {
    Rng rng(seed);
    CheckResult res;
    res.name = "hoelder inequalities";
    for (int i = 0; i < instances; ++i) {
        const double lambda = rng.uniform(0.4, 3.0);
        std::vector<LatticeFunction> hs;
        const int nclass = rng.uniform_int(1, 4);

        // First inequality on a random finite q.
        const int nq = rng.uniform_int(4, 12);
        const Pmf qf = random_pmf(rng, nq);
        hs.clear();
        for (int k = 0; k < nclass; ++k) hs.push_back(random_function(rng, 0, nq));
        const Pmf p1 = make_poisson_covering(lambda, 1e-14, nq + 2);
        const double lhs1 = d_H(p1, qf, hs);
        const double rhs1 =
            h1_constant(lambda, qf, hs) * std::sqrt(k1_scaled_fisher(lambda, qf));
        const std::string label = describe("hoelder", i, lambda, nq);
        record(res, lhs1 > rhs1 + tol, lhs1 - rhs1, label + " [K1 form]");

        // Second inequality on a full-support truncation.
        const Pmf qi = make_geometric(rng.uniform(0.35, 0.8), 1e-14);
        hs.clear();
        for (int k = 0; k < nclass; ++k) hs.push_back(random_function(rng, 0, qi.upper()));
        const Pmf p2 = make_poisson_covering(lambda, 1e-14, qi.upper() + 2);
        const double lhs2 = d_H(p2, qi, hs);
        const double rhs2 =
            h2_constant(lambda, qi, hs) * std::sqrt(k2_discrete_fisher(lambda, qi));
        if (lhs2 > rhs2 + tol)
            res.violations.push_back(label + " [K2 form]: excess " +
                                     std::to_string(lhs2 - rhs2));
    }
    return res;
}

}  // namespace steininfo
