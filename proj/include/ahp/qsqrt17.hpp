#pragma once

#include "ahp/rational.hpp"

#include <optional>
#include <string>

namespace ahp {

// Element a + b*sqrt(17) of the real quadratic field Q(sqrt17).
struct QSqrt17 {
    Rational a;
    Rational b;

    QSqrt17() = default;
    QSqrt17(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QSqrt17(const Rational& r) : a(r), b(0) {}
    explicit QSqrt17(long n) : a(n), b(0) {}

    static QSqrt17 sqrt17() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    QSqrt17 conj() const { return {a, -b}; }
    Rational norm() const { return a * a - 17 * b * b; }

    // Exact sign of the real embedding (sqrt17 > 0).
    int sign() const;

    QSqrt17 inverse() const;

    // Exact square root staying inside Q(sqrt17), positive branch.
    std::optional<QSqrt17> sqrt_in_field() const;

    friend QSqrt17 operator+(const QSqrt17& x, const QSqrt17& y) { return {x.a + y.a, x.b + y.b}; }
    friend QSqrt17 operator-(const QSqrt17& x, const QSqrt17& y) { return {x.a - y.a, x.b - y.b}; }
    friend QSqrt17 operator-(const QSqrt17& x) { return {-x.a, -x.b}; }
    friend QSqrt17 operator*(const QSqrt17& x, const QSqrt17& y) {
        return {x.a * y.a + 17 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend QSqrt17 operator/(const QSqrt17& x, const QSqrt17& y) { return x * y.inverse(); }
    friend bool operator==(const QSqrt17& x, const QSqrt17& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const QSqrt17& x, const QSqrt17& y) { return !(x == y); }
    // Ordering for use as a map key (not the real-embedding order).
    friend bool operator<(const QSqrt17& x, const QSqrt17& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }

    std::string str() const;
};

} // namespace ahp
