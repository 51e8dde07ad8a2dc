#include "ahp/qsqrt17.hpp"

#include <sstream>

namespace ahp {

int QSqrt17::sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // mixed signs: compare a^2 against 17 b^2
    Rational diff = a * a - 17 * b * b;
    int sd = diff.sign();
    // a > 0, b < 0: positive iff a^2 > 17 b^2
    if (sa > 0) return sd;
    return -sd;
}

QSqrt17 QSqrt17::inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("QSqrt17: division by zero");
    return {a / n, -b / n};
}

std::optional<QSqrt17> QSqrt17::sqrt_in_field() const {
    if (sign() < 0) return std::nullopt;
    if (is_zero()) return QSqrt17(Rational(0));
    if (b == 0) {
        if (auto r = perfect_sqrt(a)) return QSqrt17(*r);
        if (auto r = perfect_sqrt(a / 17)) return QSqrt17{Rational(0), *r};
        return std::nullopt;
    }
    // (u + v sqrt17)^2 = u^2 + 17 v^2 + 2uv sqrt17
    Rational D = a * a - 17 * b * b;
    auto s = perfect_sqrt(D);
    if (!s) return std::nullopt;
    for (int br = 0; br < 2; ++br) {
        Rational t = br == 0 ? (a + *s) / 2 : (a - *s) / 2;
        if (auto u = perfect_sqrt(t)) {
            if (*u == 0) continue;
            Rational v = b / (2 * *u);
            QSqrt17 cand{*u, v};
            if (cand * cand == *this) {
                if (cand.sign() < 0) cand = -cand;
                return cand;
            }
        }
    }
    return std::nullopt;
}

std::string QSqrt17::str() const {
    std::ostringstream os;
    if (is_zero()) return "0";
    bool first = true;
    if (a != 0) {
        os << a;
        first = false;
    }
    if (b != 0) {
        if (!first && b > 0) os << "+";
        if (b == -1)
            os << "-";
        else if (b != 1)
            os << b << "*";
        os << "sqrt17";
    }
    return os.str();
}

} // namespace ahp
