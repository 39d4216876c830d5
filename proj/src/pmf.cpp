#include "steininfo/pmf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "steininfo/summation.hpp"

namespace steininfo {

namespace {

constexpr double kMassTol = 1e-12;
// Window cap: below this log-probability exp() is at risk of flushing to
// zero, which would violate positivity of stored entries.
constexpr double kLogFloor = -700.0;

double poisson_log_pmf(double lambda, int x) {
    return -lambda + x * std::log(lambda) - std::lgamma(static_cast<double>(x) + 1.0);
}

// tail = 1 - sum(probs) through the compensated accumulator, clamped at 0.
double residual_mass(const std::vector<double>& probs) {
    StableSum s(-1.0);
    for (double v : probs) s.add(v);
    const double tail = -s.value();
    return tail > 0.0 ? tail : 0.0;
}

}  // namespace

double Pmf::log_prob(int x) const {
    if (!contains(x)) return -std::numeric_limits<double>::infinity();
    return log_probs_[static_cast<std::size_t>(x - a_)];
}

double Pmf::forward_ratio(int x) const {
    if (!contains(x)) return 0.0;
    if (x < upper()) {
        return std::exp(log_probs_[static_cast<std::size_t>(x + 1 - a_)] -
                        log_probs_[static_cast<std::size_t>(x - a_)]);
    }
    return analytic_ratio_ ? analytic_ratio_(x) : 0.0;
}

void Pmf::validate() const {
    if (probs_.empty()) throw std::invalid_argument("pmf: empty support window");
    if (probs_.size() != log_probs_.size()) throw std::invalid_argument("pmf: inconsistent storage");
    for (double v : probs_) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw std::invalid_argument("pmf: probabilities must be strictly positive");
    }
    if (!(tail_mass_ >= 0.0) || tail_mass_ >= 1.0)
        throw std::invalid_argument("pmf: tail mass out of range");
    if (!infinite_ && tail_mass_ != 0.0)
        throw std::invalid_argument("pmf: finite-support law cannot carry tail mass");
    StableSum s(tail_mass_ - 1.0);
    for (double v : probs_) s.add(v);
    if (std::abs(s.value()) > kMassTol)
        throw std::invalid_argument("pmf: probabilities and tail mass do not sum to 1");
}

Pmf Pmf::from_values(int a, std::vector<double> probs, double tail_mass,
                     std::string label, bool infinite_support) {
    Pmf p;
    p.a_ = a;
    p.probs_ = std::move(probs);
    p.log_probs_.reserve(p.probs_.size());
    for (double v : p.probs_) p.log_probs_.push_back(std::log(v));
    p.tail_mass_ = tail_mass;
    p.infinite_ = infinite_support;
    p.label_ = std::move(label);
    p.validate();
    return p;
}

Pmf make_poisson(double lambda, double tail_tol) {
    return make_poisson_covering(lambda, tail_tol, 0);
}

Pmf make_poisson_covering(double lambda, double tail_tol, int min_upper) {
    if (!(lambda > 0.0)) throw std::invalid_argument("poisson: lambda must be positive");
    if (!(tail_tol > 0.0) || !(tail_tol < 1.0))
        throw std::invalid_argument("poisson: tail tolerance must lie in (0, 1)");

    std::vector<double> lp;
    StableSum cum;
    int n = -1;
    while (true) {
        const int x = n + 1;
        const double l = poisson_log_pmf(lambda, x);
        if (l < kLogFloor) {  // window cap, see header
            if (lp.empty()) throw std::invalid_argument("poisson: lambda outside double range");
            break;
        }
        lp.push_back(l);
        cum.add(std::exp(l));
        n = x;
        if (n < min_upper || n < static_cast<int>(lambda)) continue;
        // Minimal N with dropped mass below tol. Once 1 - cum stops
        // resolving, fall back to a geometric domination bound on the tail.
        const double resolved = 1.0 - cum.value();
        if (resolved > 1e-15) {
            if (resolved < tail_tol) break;
        } else {
            const double next = std::exp(poisson_log_pmf(lambda, n + 1));
            const double dom = next / (1.0 - lambda / (n + 2.0));
            if (dom < tail_tol) break;
        }
    }

    Pmf p;
    p.a_ = 0;
    p.log_probs_ = std::move(lp);
    p.probs_.reserve(p.log_probs_.size());
    for (double l : p.log_probs_) p.probs_.push_back(std::exp(l));
    p.tail_mass_ = residual_mass(p.probs_);
    // Deep windows drop less mass than 1 - sum(probs) can resolve; falling
    // back to the analytic domination bound keeps the recorded tail at its
    // true (tiny) size instead of summation noise, which matters for every
    // quantity that later divides by a far-tail probability.
    if (p.tail_mass_ <= 1e-15 && n + 1 > lambda) {
        const double analytic =
            std::exp(poisson_log_pmf(lambda, n + 1)) / (1.0 - lambda / (n + 2.0));
        p.tail_mass_ = std::min(p.tail_mass_ > 0.0 ? p.tail_mass_ : analytic, analytic);
    }
    p.infinite_ = true;
    p.label_ = "poisson(" + std::to_string(lambda) + ")";
    p.analytic_ratio_ = [lambda](int x) { return lambda / (x + 1.0); };
    p.validate();
    return p;
}

Pmf make_binomial(int n, double p) {
    if (n < 1) throw std::invalid_argument("binomial: n must be a positive integer");
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("binomial: p must lie in (0, 1)");
    std::vector<double> probs(static_cast<std::size_t>(n) + 1);
    if (n <= 56) {
        // Coefficients up to C(56,28) are exact in a double; building them
        // by Pascal's rule keeps each probability within a few ulp.
        std::vector<double> c(static_cast<std::size_t>(n) + 1, 1.0);
        for (int row = 2; row <= n; ++row)
            for (int k = row - 1; k >= 1; --k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - 1)];
        for (int x = 0; x <= n; ++x)
            probs[static_cast<std::size_t>(x)] =
                c[static_cast<std::size_t>(x)] * std::pow(p, x) * std::pow(1.0 - p, n - x);
    } else {
        const double lp = std::log(p), lq = std::log1p(-p);
        const double lgn = std::lgamma(n + 1.0);
        for (int x = 0; x <= n; ++x) {
            const double l =
                lgn - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) + x * lp + (n - x) * lq;
            probs[static_cast<std::size_t>(x)] = std::exp(l);
        }
    }
    for (int x = 0; x <= n; ++x) {
        if (!(probs[static_cast<std::size_t>(x)] > 0.0))
            throw std::invalid_argument("binomial: probability underflow at x=" + std::to_string(x));
    }
    return Pmf::from_values(0, std::move(probs), 0.0,
                            "binomial(" + std::to_string(n) + "," + std::to_string(p) + ")", false);
}

Pmf make_geometric(double q, double tail_tol) {
    if (!(q > 0.0) || !(q < 1.0)) throw std::invalid_argument("geometric: q must lie in (0, 1)");
    if (!(tail_tol > 0.0) || !(tail_tol < 1.0))
        throw std::invalid_argument("geometric: tail tolerance must lie in (0, 1)");
    const double l1q = std::log1p(-q);
    // Smallest N with (1-q)^(N+1) < tol.
    int n = static_cast<int>(std::ceil(std::log(tail_tol) / l1q)) - 1;
    if (n < 0) n = 0;
    while (std::exp((n + 1) * l1q) >= tail_tol) ++n;
    while (n > 0 && std::exp(static_cast<double>(n) * l1q) < tail_tol) --n;

    Pmf p;
    p.a_ = 0;
    const double lq = std::log(q);
    p.log_probs_.resize(static_cast<std::size_t>(n) + 1);
    p.probs_.resize(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) {
        p.log_probs_[static_cast<std::size_t>(x)] = lq + x * l1q;
        p.probs_[static_cast<std::size_t>(x)] = std::exp(p.log_probs_[static_cast<std::size_t>(x)]);
    }
    p.tail_mass_ = std::exp((n + 1) * l1q);
    p.infinite_ = true;
    p.label_ = "geometric(" + std::to_string(q) + ")";
    p.analytic_ratio_ = [q](int) { return 1.0 - q; };
    p.validate();
    return p;
}

Pmf make_point_mass(int x) {
    if (x < 0) throw std::invalid_argument("point mass: location must satisfy x >= 0");
    return Pmf::from_values(x, {1.0}, 0.0, "delta(" + std::to_string(x) + ")", false);
}

Pmf convolve(const Pmf& p1, const Pmf& p2) {
    if (p1.a() < 0 || p2.a() < 0)
        throw std::invalid_argument("convolve: supports must start at a >= 0");
    const int n1 = p1.size(), n2 = p2.size();
    std::vector<double> out(static_cast<std::size_t>(n1 + n2 - 1));
    const auto& v1 = p1.probs();
    const auto& v2 = p2.probs();
    for (int k = 0; k < n1 + n2 - 1; ++k) {
        StableSum s;
        const int ilo = k - n2 + 1 > 0 ? k - n2 + 1 : 0;
        const int ihi = k < n1 - 1 ? k : n1 - 1;
        for (int i = ilo; i <= ihi; ++i)
            s.add(v1[static_cast<std::size_t>(i)] * v2[static_cast<std::size_t>(k - i)]);
        out[static_cast<std::size_t>(k)] = s.value();
    }

    // Trim any zero (underflowed) entries: leading zeros shift the lower
    // endpoint, everything from the first interior/trailing zero onward is
    // dropped into the tail.
    int start = 0;
    while (start < static_cast<int>(out.size()) && out[static_cast<std::size_t>(start)] <= 0.0) ++start;
    int stop = start;
    while (stop < static_cast<int>(out.size()) && out[static_cast<std::size_t>(stop)] > 0.0) ++stop;
    if (start == stop) throw std::invalid_argument("convolve: result underflowed entirely");
    std::vector<double> kept(out.begin() + start, out.begin() + stop);
    const bool trimmed = (start != 0) || (stop != static_cast<int>(out.size()));

    const bool infinite = p1.infinite_support() || p2.infinite_support();
    double tail = 0.0;
    if (infinite || trimmed || p1.tail_mass() > 0.0 || p2.tail_mass() > 0.0)
        tail = residual_mass(kept);
    return Pmf::from_values(p1.a() + p2.a() + start, std::move(kept), tail,
                            p1.label() + "*" + p2.label(), infinite || (tail > 0.0));
}

Pmf convolve_n(const Pmf& p, int n) {
    if (n < 0) throw std::invalid_argument("convolve_n: n must be >= 0");
    if (n == 0) return make_point_mass(0);
    Pmf acc = p;
    for (int i = 1; i < n; ++i) acc = convolve(acc, p);
    if (n > 1) {
        acc = Pmf::from_values(acc.a(), acc.probs(), acc.tail_mass(),
                               p.label() + "^*" + std::to_string(n), acc.infinite_support());
    }
    return acc;
}

double expectation(const Pmf& p, const LatticeFunction& l) {
    if (l.empty()) return 0.0;
    const int lo = p.a() > l.lo() ? p.a() : l.lo();
    const int hi = p.upper() < l.hi() ? p.upper() : l.hi();
    StableSum s;
    for (int x = lo; x <= hi; ++x) s.add(l(x) * p.prob(x));
    return s.value();
}

double mean(const Pmf& p) {
    StableSum s;
    for (int x = p.a(); x <= p.upper(); ++x) s.add(x * p.prob(x));
    return s.value();
}

double cdf(const Pmf& p, int z) {
    if (z < p.a()) return 0.0;
    if (z >= p.upper()) return 1.0 - p.tail_mass();
    StableSum s;
    for (int x = p.a(); x <= z; ++x) s.add(p.prob(x));
    return s.value();
}

}  // namespace steininfo
