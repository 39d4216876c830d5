#pragma once

#include <cmath>
#include <vector>

namespace steininfo {

// Neumaier-compensated accumulator; the carry keeps the running error of the
// plain sum so that value() is accurate to ~1 ulp of the exact result.
class StableSum {
public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

inline double stable_sum(const std::vector<double>& xs) {
    StableSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

}  // namespace steininfo
