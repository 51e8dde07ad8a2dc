#include "ahp/rational.hpp"

namespace ahp {

std::optional<Int> perfect_sqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    if (n == 0) return Int(0);
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<Rational> perfect_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = perfect_sqrt(num(q));
    if (!n) return std::nullopt;
    auto d = perfect_sqrt(den(q));
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

Int square_content(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return 1;
    Int out = 1;
    for (Int p = 2; p * p * p * p <= n && p < 100000; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            out *= p;
        }
    }
    if (auto r = perfect_sqrt(n)) out *= *r;
    return out;
}

} // namespace ahp
