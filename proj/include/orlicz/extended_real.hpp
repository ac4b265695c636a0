#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <ostream>

namespace orlicz {

/// Value in [0, inf] with the measure-theoretic convention 0 * inf = 0.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }

    constexpr double value() const { return v_; }
    bool is_infinite() const { return std::isinf(v_); }
    bool is_finite() const { return std::isfinite(v_); }

    friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) { return ExtendedReal(a.v_ + b.v_); }
    ExtendedReal& operator+=(ExtendedReal o) {
        v_ += o.v_;
        return *this;
    }

    // 0 * inf = 0, as in integrals against measures.
    friend ExtendedReal operator*(ExtendedReal a, ExtendedReal b) {
        if (a.v_ == 0.0 || b.v_ == 0.0) return ExtendedReal(0.0);
        return ExtendedReal(a.v_ * b.v_);
    }

    friend auto operator<=>(ExtendedReal a, ExtendedReal b) { return a.v_ <=> b.v_; }
    friend bool operator==(ExtendedReal a, ExtendedReal b) { return a.v_ == b.v_; }

    friend std::ostream& operator<<(std::ostream& os, ExtendedReal x) {
        if (x.is_infinite()) return os << "inf";
        return os << x.v_;
    }

private:
    double v_ = 0.0;
};

/// Kahan-compensated accumulator; summation order is the caller's order.
class KahanSum {
public:
    void add(double x) {
        if (std::isinf(x) || std::isinf(sum_)) {
            sum_ += x;
            return;
        }
        const double y = x - c_;
        const double t = sum_ + y;
        c_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double c_ = 0.0;
};

}  // namespace orlicz
