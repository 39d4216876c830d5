#include "steininfo/score_info.hpp"

#include <cmath>
#include <stdexcept>

#include "steininfo/summation.hpp"

namespace steininfo {

namespace {

void require_nested(const Pmf& p, const Pmf& q, const char* who) {
    if (p.a() != 0 || q.a() != 0)
        throw std::domain_error(std::string(who) + ": supports must start at 0");
    if (q.upper() > p.upper())
        throw std::domain_error(std::string(who) + ": q support not contained in p support");
}

// Backward ratio q(x-1)/q(x); 0 at the window start.
double backward_ratio(const Pmf& q, int x) {
    if (x <= q.a() || x > q.upper()) return 0.0;
    return std::exp(q.log_prob(x - 1) - q.log_prob(x));
}

}  // namespace

ScoreField r1_score(const Pmf& p, const Pmf& q) {
    require_nested(p, q, "r1");
    std::vector<double> vals(static_cast<std::size_t>(q.size()));
    for (int x = 0; x <= q.upper(); ++x)
        vals[static_cast<std::size_t>(x)] = p.forward_ratio(x) - q.forward_ratio(x);
    return ScoreField{ScoreField::Kind::r1, LatticeFunction(0, std::move(vals))};
}

ScoreField r2_score(const Pmf& p, const LatticeFunction& ptilde, const Pmf& q) {
    require_nested(p, q, "r2");
    if (!q.infinite_support())
        throw std::domain_error("r2: q must be a truncation of a full-support law");
    std::vector<double> vals(static_cast<std::size_t>(q.size()));
    for (int x = 0; x <= q.upper(); ++x) {
        const double px = p.prob(x);
        vals[static_cast<std::size_t>(x)] =
            ptilde(x + 1) / px * backward_ratio(q, x) - ptilde(x) / px;
    }
    return ScoreField{ScoreField::Kind::r2, LatticeFunction(0, std::move(vals))};
}

double k1_scaled_fisher(double lambda, const Pmf& q) {
    if (!(lambda > 0.0)) throw std::invalid_argument("k1: lambda must be positive");
    if (q.a() != 0) throw std::domain_error("k1: q must be supported in N");
    StableSum s;
    for (int x = 0; x <= q.upper(); ++x) {
        const double score = (x + 1) * q.forward_ratio(x) / lambda - 1.0;
        s.add(lambda * q.prob(x) * score * score);
    }
    return s.value();
}

double k2_discrete_fisher(double lambda, const Pmf& q) {
    if (!(lambda > 0.0)) throw std::invalid_argument("k2: lambda must be positive");
    if (q.a() != 0) throw std::domain_error("k2: q must be supported in N");
    StableSum s;
    for (int x = 0; x <= q.upper(); ++x) {
        const double score = lambda * backward_ratio(q, x) - x;
        s.add(q.prob(x) * score * score);
    }
    return s.value();
}

double jm_fisher_information(const Pmf& q) {
    if (q.a() != 0) throw std::domain_error("jm: q must be supported in N");
    StableSum s;
    for (int x = 0; x <= q.upper(); ++x) {
        const double score = backward_ratio(q, x) - 1.0;
        s.add(q.prob(x) * score * score);
    }
    return s.value();
}

double factorization_check_1(const TestFunction& f, const Pmf& p, const Pmf& q) {
    if (f.cls != FunctionClass::f1 || f(0) != 0.0)
        throw std::invalid_argument("factorization: f must be class F1 with f(0) = 0");
    require_nested(p, q, "factorization");
    const ScoreField r1 = r1_score(p, q);
    const int nq = q.upper();
    const int hi = std::max(p.upper(), f.fn.hi() + 1);
    double worst = 0.0;
    for (int x = 0; x <= hi; ++x) {
        const double lhs = t1_apply(f, p, x);
        double rhs = t1_apply(f, q, x) + f(x + 1) * r1(x);
        // The part of T1(f,p) supported beyond q's window balances the
        // identity there; the boundary x = N itself is carried by r1.
        if (x > nq && p.contains(x)) rhs += f(x + 1) * p.forward_ratio(x) - f(x);
        const double res = std::abs(lhs - rhs);
        if (res > worst) worst = res;
    }
    return worst;
}

IdentityReport identity_check_1(const Pmf& p, const Pmf& q, const LatticeFunction& l) {
    require_nested(p, q, "identity-r1");
    const TestFunction f = stein_solution_1(p, l);
    const ScoreField r1 = r1_score(p, q);
    const int nq = q.upper();

    IdentityReport rep;
    rep.lhs = expectation(q, l) - expectation(p, l);
    StableSum main;
    for (int x = 0; x < nq; ++x) main.add(q.prob(x) * f(x + 1) * r1(x));
    rep.main_term = main.value();
    rep.error_term = q.prob(nq) * f(nq + 1) * p.forward_ratio(nq);
    rep.residual = rep.lhs - rep.main_term - rep.error_term;
    return rep;
}

IdentityReport identity_check_2(const Pmf& p, const LatticeFunction& ptilde,
                                const Pmf& q, const LatticeFunction& l) {
    require_nested(p, q, "identity-r2");
    // Precondition of the identity: pt(x+1)/p(x) must collapse to one
    // constant over the support.
    const double c0 = ptilde(1) / p.prob(0);
    for (int x = 0; x <= p.upper(); ++x) {
        const double c = ptilde(x + 1) / p.prob(x);
        if (!(std::abs(c / c0 - 1.0) <= 1e-10))
            throw std::domain_error(
                "identity-r2: ptilde(x+1)/p(x) is not constant; family unsupported");
    }
    const TestFunction f = stein_solution_2(p, ptilde, l);
    const ScoreField r2 = r2_score(p, ptilde, q);

    IdentityReport rep;
    rep.lhs = expectation(q, l) - expectation(p, l);
    StableSum main;
    for (int x = 0; x <= q.upper(); ++x) main.add(q.prob(x) * f(x) * r2(x));
    rep.main_term = main.value();
    rep.error_term = 0.0;
    rep.residual = rep.lhs - rep.main_term;
    return rep;
}

double k1_subadditive_bound(double lambda, const std::vector<double>& q_params) {
    if (q_params.empty()) throw std::invalid_argument("subadditive bound: empty parameter list");
    StableSum means;
    for (double qi : q_params) {
        if (!(qi > 0.0) || !(qi < 1.0))
            throw std::invalid_argument("subadditive bound: q_i must lie in (0, 1)");
        means.add((1.0 - qi) / qi);
    }
    if (std::abs(means.value() - lambda) > 1e-10)
        throw std::invalid_argument("subadditive bound: lambda must equal sum (1-q_i)/q_i");
    StableSum s;
    for (double qi : q_params) {
        const double r = 1.0 - qi;
        s.add(r * r * r / (qi * qi));
    }
    return s.value() / lambda;
}

}  // namespace steininfo
