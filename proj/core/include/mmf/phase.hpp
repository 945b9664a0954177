#pragma once

#include <mmf/rational.hpp>
#include <complex>
#include <cmath>

namespace mmf {

// A root of unity e(alpha) = e^{2*pi*i*alpha}, stored as the exact rational
// alpha reduced mod 1. Keeps every series in the library real-rational:
// unimodular constants never leak into coefficients.
class Phase {
public:
    Phase() : alpha_(0) {}
    explicit Phase(Rat alpha) : alpha_(std::move(alpha)) { reduce(); }

    static Phase e(const Rat& alpha) { return Phase(alpha); }
    static Phase one() { return Phase(); }

    const Rat& alpha() const { return alpha_; }

    Phase operator*(const Phase& o) const { return Phase(alpha_ + o.alpha_); }
    Phase inverse() const { return Phase(-alpha_); }
    Phase pow(long m) const { return Phase(alpha_ * Rat(m)); }

    bool operator==(const Phase& o) const { return alpha_ == o.alpha_; }
    bool operator!=(const Phase& o) const { return alpha_ != o.alpha_; }

    bool is_one() const { return alpha_ == 0; }
    // True when e(alpha) is real, i.e. alpha in {0, 1/2}.
    bool is_real() const { return alpha_ == 0 || alpha_ == rat(1, 2); }

    std::complex<double> value() const {
        double a = 2.0 * M_PI * alpha_.get_d();
        return {std::cos(a), std::sin(a)};
    }

private:
    void reduce() {
        // normalize into [0, 1)
        alpha_.canonicalize();
        long f = floor_long(alpha_);
        alpha_ -= f;
    }
    Rat alpha_;
};

} // namespace mmf
