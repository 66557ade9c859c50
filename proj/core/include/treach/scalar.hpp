#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>

#include "treach/errors.hpp"

namespace treach {

using Rational = boost::multiprecision::cpp_rational;

/// An element of the max-plus semiring: an exact rational, or the
/// bottom element eps = -infinity. Bottom is a distinct variant, never
/// a sentinel value.
class Scalar {
public:
    Scalar() = default; // bottom
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(int n) : v_(Rational(n)) {}

    static Scalar bottom() { return Scalar{}; }
    static Scalar unit() { return Scalar{0}; } // neutral for otimes

    bool is_bottom() const { return !v_.has_value(); }
    bool is_finite() const { return v_.has_value(); }

    const Rational& value() const {
        if (!v_) throw PreconditionViolated("Scalar::value on bottom");
        return *v_;
    }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    // Total order with bottom below every rational.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.is_bottom()) return b.is_finite();
        if (b.is_bottom()) return false;
        return *a.v_ < *b.v_;
    }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

private:
    std::optional<Rational> v_;
};

// a (+) b = max(a, b)
inline Scalar oplus(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

// a (*) b = a + b, absorbing in bottom
inline Scalar otimes(const Scalar& a, const Scalar& b) {
    if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
    return Scalar{a.value() + b.value()};
}

// a - b for finite b; bottom - finite = bottom.
inline Scalar residual(const Scalar& a, const Scalar& b) {
    if (b.is_bottom()) throw PreconditionViolated("residual by bottom");
    if (a.is_bottom()) return Scalar::bottom();
    return Scalar{a.value() - b.value()};
}

inline Scalar negate(const Scalar& a) {
    if (a.is_bottom()) throw PreconditionViolated("negate bottom");
    return Scalar{-a.value()};
}

/// d(x,y) = |exp(x) - exp(y)| with exp(bottom) = 0. Floating point,
/// diagnostics only.
double metric(const Scalar& a, const Scalar& b);

std::string to_string(const Scalar& a);

/// Accepts "-inf", integers ("3"), decimals ("-1.25"), and rationals ("p/q").
Scalar parse_scalar(const std::string& text);

} // namespace treach
