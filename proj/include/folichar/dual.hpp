// Forward-mode dual numbers, used as an algorithmic-differentiation route
// independent of the hand-written chain-rule evaluators.
#pragma once

#include <cmath>

namespace folichar {

struct Dual {
    double v = 0;
    double d = 0;

    Dual() = default;
    Dual(double value) : v(value), d(0) {}
    Dual(double value, double deriv) : v(value), d(deriv) {}

    friend Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
    friend Dual operator/(Dual a, Dual b) {
        return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
    }
    Dual operator-() const { return {-v, -d}; }
};

inline Dual sin(Dual a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Dual cos(Dual a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }
inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }

} // namespace folichar
