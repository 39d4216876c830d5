#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace steininfo {

// Real-valued function on the integers, stored on a finite window and
// identically zero outside it. The zero-outside convention implements the
// usual indicator bookkeeping: expressions that would divide by an indicator
// are instead multiplied by it, so evaluation never faults.
class LatticeFunction {
public:
    LatticeFunction() = default;

    LatticeFunction(int window_lo, std::vector<double> values)
        : lo_(window_lo), values_(std::move(values)) {}

    double operator()(int x) const {
        if (values_.empty() || x < lo_ || x >= lo_ + static_cast<int>(values_.size())) return 0.0;
        return values_[static_cast<std::size_t>(x - lo_)];
    }

    bool empty() const { return values_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return values_.empty() ? lo_ - 1 : lo_ + static_cast<int>(values_.size()) - 1; }
    const std::vector<double>& values() const { return values_; }

    // Range of the function over all of Z; the implicit zero outside the
    // window counts, which matters for sup/inf style constants.
    std::pair<double, double> range_over_z() const {
        double mn = 0.0, mx = 0.0;
        for (double v : values_) {
            if (v < mn) mn = v;
            if (v > mx) mx = v;
        }
        return {mn, mx};
    }

    static LatticeFunction constant(double c, int lo, int hi) {
        check_window(lo, hi);
        return LatticeFunction(lo, std::vector<double>(static_cast<std::size_t>(hi - lo + 1), c));
    }

    static LatticeFunction identity(int lo, int hi) {
        check_window(lo, hi);
        std::vector<double> v(static_cast<std::size_t>(hi - lo + 1));
        for (int x = lo; x <= hi; ++x) v[static_cast<std::size_t>(x - lo)] = static_cast<double>(x);
        return LatticeFunction(lo, std::move(v));
    }

    // Indicator of (-inf, z] restricted to [lo, hi].
    static LatticeFunction indicator_leq(int z, int lo, int hi) {
        check_window(lo, hi);
        std::vector<double> v(static_cast<std::size_t>(hi - lo + 1), 0.0);
        for (int x = lo; x <= hi && x <= z; ++x) v[static_cast<std::size_t>(x - lo)] = 1.0;
        return LatticeFunction(lo, std::move(v));
    }

    static LatticeFunction point_indicator(int z) {
        return LatticeFunction(z, std::vector<double>{1.0});
    }

private:
    static void check_window(int lo, int hi) {
        if (hi < lo) throw std::invalid_argument("LatticeFunction: empty window");
    }

    int lo_ = 0;
    std::vector<double> values_;
};

}  // namespace steininfo
