#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "steininfo/bounds.hpp"
#include "steininfo/checks.hpp"
#include "steininfo/score_info.hpp"
#include "steininfo/summation.hpp"

using namespace steininfo;

namespace {

// Independent half-L1 in extended precision.
long double half_l1(const Pmf& p, const Pmf& q) {
    long double s = 0.0L;
    const int hi = std::max(p.upper(), q.upper());
    for (int x = std::min(p.a(), q.a()); x <= hi; ++x)
        s += std::abs((long double)p.prob(x) - (long double)q.prob(x));
    return 0.5L * s;
}

// Alternative factorial display of the scaled second solution,
// (x-1)!/lambda^x * sum_{k<x} (h(k) - E_p h) lambda^k / k!.
double alt_scaled_f2(double lambda, const Pmf& p, const LatticeFunction& h, int x) {
    const double eh = expectation(p, h);
    StableSum s;
    for (int k = 0; k < x; ++k)
        s.add((h(k) - eh) * std::exp(k * std::log(lambda) - std::lgamma(k + 1.0)));
    return std::exp(std::lgamma((double)x) - x * std::log(lambda)) * s.value();
}

}  // namespace

TEST_CASE("total variation distance") {
    SUBCASE("coincident laws") {
        const Pmf b = make_binomial(5, 0.3);
        CHECK(tv_distance(b, b) == 0.0);
        const Pmf p = make_poisson(1.0, 1e-13);
        CHECK(tv_distance(p, p) <= p.tail_mass() + 1e-15);
    }

    SUBCASE("disjoint point masses") {
        CHECK(tv_distance(make_point_mass(0), make_point_mass(1)) == 1.0);
    }

    SUBCASE("binomial vs poisson pinned by the direct oracle") {
        const Pmf q = make_binomial(10, 0.1);
        const Pmf p = make_poisson(1.0, 1e-14);
        const double tv = tv_distance(p, q);
        const long double oracle = half_l1(p, q) + 0.5L * (long double)p.tail_mass();
        CHECK(std::abs((long double)tv - oracle) < 1e-15L);
        CHECK(tv > 0.0);
        CHECK(tv < 0.03);  // lambda^2/n scale
    }

    SUBCASE("metric properties on random laws") {
        Rng rng(43);
        for (int i = 0; i < 12; ++i) {
            const Pmf a = random_pmf(rng, rng.uniform_int(2, 9));
            const Pmf b = random_pmf(rng, rng.uniform_int(2, 9));
            const Pmf c = random_pmf(rng, rng.uniform_int(2, 9));
            CHECK(tv_distance(a, b) == tv_distance(b, a));
            CHECK(tv_distance(a, b) >= 0.0);
            CHECK(tv_distance(a, b) <= 1.0);
            CHECK(tv_distance(a, c) <= tv_distance(a, b) + tv_distance(b, c) + 1e-12);
        }
    }
}

TEST_CASE("optimal tv test function") {
    SUBCASE("ties get +1") {
        const Pmf b = make_binomial(3, 0.5);
        const LatticeFunction h = optimal_tv_test_function(b, b);
        for (int x = 0; x <= 3; ++x) CHECK(h(x) == 1.0);
        CHECK(std::abs(expectation(b, h) - expectation(b, h)) == 0.0);
    }

    SUBCASE("point masses") {
        const Pmf d0 = make_point_mass(0), d1 = make_point_mass(1);
        const LatticeFunction h = optimal_tv_test_function(d0, d1);
        CHECK(h(0) == -1.0);
        CHECK(h(1) == 1.0);
        CHECK(0.5 * (expectation(d1, h) - expectation(d0, h)) == 1.0);
    }

    SUBCASE("achieves the half-L1 form on random pairs") {
        Rng rng(47);
        for (int i = 0; i < 12; ++i) {
            const Pmf p = random_pmf(rng, rng.uniform_int(2, 10));
            const Pmf q = random_pmf(rng, rng.uniform_int(2, 10));
            const LatticeFunction h = optimal_tv_test_function(p, q);
            const double lhs = 0.5 * (expectation(q, h) - expectation(p, h));
            CHECK(lhs == doctest::Approx((double)half_l1(p, q)).epsilon(1e-13));
        }
    }
}

TEST_CASE("generic distance over finite classes") {
    Rng rng(53);
    const Pmf p = random_pmf(rng, 8);
    const Pmf q = random_pmf(rng, 8);

    SUBCASE("optimal function recovers twice the tv distance") {
        const double d = d_H(p, q, {optimal_tv_test_function(p, q)});
        CHECK(d == doctest::Approx(2.0 * tv_distance(p, q)).epsilon(1e-13));
    }

    SUBCASE("constants see nothing") {
        CHECK(d_H(p, q, {LatticeFunction::constant(4.0, 0, 8)}) < 1e-12);
    }

    SUBCASE("indicator class gives the kolmogorov distance") {
        std::vector<LatticeFunction> hs;
        double oracle = 0.0;
        for (int z = 0; z <= 8; ++z) {
            hs.push_back(LatticeFunction::indicator_leq(z, 0, 8));
            oracle = std::max(oracle, std::abs(cdf(q, z) - cdf(p, z)));
        }
        const double d = d_H(p, q, hs);
        CHECK(d == doctest::Approx(oracle).epsilon(1e-13));
        CHECK(d <= 2.0 * tv_distance(p, q) + 1e-13);
    }

    SUBCASE("empty class rejected") {
        CHECK_THROWS_AS(d_H(p, q, {}), std::invalid_argument);
    }
}

TEST_CASE("stein magic factor") {
    CHECK(stein_magic_H(0.5) == 1.0);
    CHECK(stein_magic_H(2.0 / std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(stein_magic_H(2.0) == doctest::Approx(std::sqrt(1.0 / std::exp(1.0))).epsilon(1e-15));
    CHECK_THROWS_AS(stein_magic_H(0.0), std::invalid_argument);
}

TEST_CASE("stein factor sups against the cap") {
    SUBCASE("constant h collapses") {
        // constant over the whole evaluation window, not just a patch of it
        const LatticeFunction c = LatticeFunction::constant(1.0, 0, 120);
        CHECK(stein_factor_sup_1(1.0, c, 40).sup_value < 1e-10);
        CHECK(stein_factor_sup_2(1.0, c, 40).sup_value < 1e-10);
    }

    SUBCASE("optimal tv function for lambda 1 stays under 2 sqrt(2/e)") {
        const Pmf p = make_poisson(1.0, 1e-14);
        const Pmf q = make_binomial(10, 0.1);
        const LatticeFunction h = optimal_tv_test_function(p, q);
        const SteinFactorBound b = stein_factor_sup_1(1.0, h, 40);
        CHECK(b.cap == doctest::Approx(2.0 * std::sqrt(2.0 / std::exp(1.0))).epsilon(1e-14));
        CHECK(b.sup_value <= b.cap + 1e-12);
        CHECK(b.sup_value > 0.0);
    }

    SUBCASE("indicator h for lambda 5") {
        const LatticeFunction h = LatticeFunction::indicator_leq(3, 0, 40);
        const SteinFactorBound b = stein_factor_sup_1(5.0, h, 60);
        CHECK(b.cap == doctest::Approx(stein_magic_H(5.0)).epsilon(1e-14));
        CHECK(b.sup_value <= b.cap + 1e-12);
    }

    SUBCASE("scaled second solution matches the factorial display") {
        const double lambda = 1.5;
        const Pmf p = make_poisson(lambda, 1e-14);
        const LatticeFunction pt = poisson_ptilde(lambda, p.upper() + 1);
        Rng rng(59);
        const LatticeFunction h = random_function(rng, 0, 10);
        const TestFunction f2 = stein_solution_2(p, pt, h);
        const double scale = std::exp(lambda) / lambda;
        for (int x = 1; x <= 12; ++x)
            CHECK(scale * f2(x) == doctest::Approx(alt_scaled_f2(lambda, p, h, x)).epsilon(1e-10));
    }

    SUBCASE("random range-2 functions respect both caps") {
        const CheckResult res = check_factor_caps(61, {0.5, 1.0, 2.0, 5.0, 10.0}, 5, 60, 1e-12);
        CHECK(res.ok());
    }
}

TEST_CASE("tv bound through K1") {
    SUBCASE("poisson against itself holds trivially") {
        const BoundReport rep = tv_bound_k1(1.0, make_poisson(1.0, 1e-14));
        CHECK(rep.holds);
        CHECK(rep.distance_exact < 1e-12);
        CHECK(rep.info_value < 1e-12);
        CHECK(rep.error_term >= 0.0);
    }

    SUBCASE("matched-mean binomial") {
        const BoundReport rep = tv_bound_k1(1.0, make_binomial(10, 0.1));
        CHECK(rep.kind == "K1");
        CHECK(rep.info_value == doctest::Approx(1.0 / 90.0).epsilon(1e-10));
        CHECK(rep.magic_constant ==
              doctest::Approx(std::sqrt(2.0 / std::exp(1.0))).epsilon(1e-14));
        CHECK(rep.magic_constant * std::sqrt(rep.info_value) ==
              doctest::Approx(0.0904195).epsilon(1e-5));
        CHECK(rep.holds);
        CHECK(rep.slack > 0.0);
    }

    SUBCASE("strictly sharper than the sqrt(2 K1) reference") {
        for (double lambda : {0.25, 0.9, 3.0}) {
            const Pmf q = make_binomial(12, lambda / 12);
            const BoundReport rep = tv_bound_k1(lambda, q);
            const double khj = std::sqrt(2.0 * rep.info_value);
            CHECK(rep.magic_constant * std::sqrt(rep.info_value) < khj);
        }
    }
}

TEST_CASE("tv bound through K2") {
    SUBCASE("poisson against itself") {
        const BoundReport rep = tv_bound_k2(1.0, make_poisson(1.0, 1e-14));
        CHECK(rep.holds);
        CHECK(rep.error_term == 0.0);
    }

    SUBCASE("geometric against poisson") {
        const BoundReport rep = tv_bound_k2(1.0, make_geometric(0.5, 1e-14));
        CHECK(rep.kind == "K2");
        CHECK(rep.info_value == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(rep.bound_value ==
              doctest::Approx(std::sqrt(2.0 / std::exp(1.0))).epsilon(1e-9));
        CHECK(rep.distance_exact < rep.bound_value);
        CHECK(rep.holds);
    }

    SUBCASE("finite support rejected") {
        CHECK_THROWS_AS(tv_bound_k2(1.0, make_binomial(10, 0.1)), std::domain_error);
    }
}

TEST_CASE("hoelder constants") {
    SUBCASE("constant classes give nothing") {
        Rng rng(67);
        const Pmf q = random_pmf(rng, 8);
        CHECK(h1_constant(1.0, q, {LatticeFunction::constant(5.0, 0, 120)}) < 1e-7);
        const Pmf g = make_geometric(0.5, 1e-14);
        CHECK(h2_constant(1.0, g, {LatticeFunction::constant(5.0, 0, 120)}) < 1e-7);
    }

    SUBCASE("first constant consistent with the tv-bound constant") {
        const Pmf q = make_binomial(10, 0.1);
        const Pmf p = make_poisson_covering(1.0, 1e-14, q.upper() + 2);
        const double h1 = h1_constant(1.0, q, {optimal_tv_test_function(p, q)});
        CHECK(h1 <= 2.0 * std::sqrt(1.0) * stein_magic_H(1.0) + 1e-3);
        CHECK(h1 > 0.0);
    }

    SUBCASE("inequalities hold on random instances") {
        const CheckResult res = check_hoelder(71, 15, 1e-12);
        CHECK(res.ok());
    }

    SUBCASE("preconditions") {
        Rng rng(73);
        const Pmf q = random_pmf(rng, 5);
        CHECK_THROWS_AS(h1_constant(1.0, q, {}), std::invalid_argument);
        CHECK_THROWS_AS(h2_constant(1.0, q, {LatticeFunction::constant(1.0, 0, 5)}),
                        std::domain_error);
    }
}

TEST_CASE("improvement claim over the reference constant") {
    // sqrt(lambda) H(lambda) rises to sqrt(2/e) at 2/e and stays there.
    const double target = std::sqrt(2.0 / std::exp(1.0));
    double sup = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lambda = 0.01 * std::pow(10000.0, i / 99.0);
        sup = std::max(sup, std::sqrt(lambda) * stein_magic_H(lambda));
    }
    const double at_knee = std::sqrt(2.0 / std::exp(1.0)) *
                           stein_magic_H(2.0 / std::exp(1.0));
    CHECK(std::abs(sup - target) < 1e-12);
    CHECK(std::abs(at_knee - target) < 1e-12);
    CHECK(sup < std::sqrt(2.0));
}
