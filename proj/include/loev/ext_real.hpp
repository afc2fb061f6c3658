#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

#include "loev/errors.hpp"
#include "loev/numfmt.hpp"

namespace loev {

// Extended real: a finite double or +infinity. NaN and -infinity are rejected
// at construction, which keeps every downstream comparison total and lets
// dominance tests be written in the addition form f(y) + c*g < f(x) without
// ever forming inf - inf.
class ExtReal {
public:
    ExtReal() = default;

    ExtReal(double v) : v_(v) {
        if (std::isnan(v)) throw InputError("ExtReal: NaN is not a value");
        if (v == -std::numeric_limits<double>::infinity())
            throw InputError("ExtReal: -infinity is not a value");
    }

    static ExtReal infinity() {
        ExtReal r;
        r.v_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_finite() const { return std::isfinite(v_); }

    // Raw double; +inf when not finite.
    double raw() const { return v_; }

    double finite_value() const {
        if (!is_finite()) throw InputError("ExtReal: expected a finite value");
        return v_;
    }

    // inf + anything = inf; finite + finite stays in range (overflow saturates
    // to +inf, which is still a legal value). No -inf ever enters, so the sum
    // cannot be NaN.
    friend ExtReal operator+(ExtReal a, ExtReal b) {
        ExtReal r;
        r.v_ = a.v_ + b.v_;
        return r;
    }

    // Subtraction is only offered against a finite right-hand side.
    friend ExtReal operator-(ExtReal a, double b) {
        if (!std::isfinite(b)) throw InputError("ExtReal: subtrahend must be finite");
        ExtReal r;
        r.v_ = a.v_ - b;
        return r;
    }

    friend auto operator<=>(ExtReal a, ExtReal b) { return a.v_ <=> b.v_; }
    friend bool operator==(ExtReal a, ExtReal b) { return a.v_ == b.v_; }

    std::string str() const { return is_finite() ? format_double(v_) : "inf"; }

private:
    double v_ = 0.0;
};

} // namespace loev
