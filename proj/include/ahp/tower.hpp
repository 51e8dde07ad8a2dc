#pragma once

#include "ahp/qsqrt17.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahp {

// Exact arithmetic in the real multiquadratic tower
//   Q < Q(sqrt17) < Q(sqrt17, sqrt(q1), sqrt(q2), ...)
// where each registered radicand q_i is itself a previously constructed
// tower element certified positive. An element is a finite sum
//   sum_K  c_K * prod_{i in K} sqrt(q_i)
// over squarefree monomials K in the registered generators, with
// coefficients c_K in Q(sqrt17). Equality of canonical forms is exact
// equality: generators are kept pairwise inequivalent modulo squares, so
// the radical monomials are linearly independent over Q(sqrt17).
//
// The generator registry is process-global and guarded by a mutex;
// reducing the same radicand twice yields the same generator.

class TowerScalar;

// Monomial in generator ids, sorted, squarefree.
using RadKey = std::vector<int>;

struct TowerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class TowerScalar {
  public:
    TowerScalar() = default;
    explicit TowerScalar(const Rational& r);
    explicit TowerScalar(long n);
    explicit TowerScalar(const QSqrt17& q);

    static TowerScalar sqrt17();
    // beta_n = sqrt(d - n), d = (7+sqrt17)/2
    static TowerScalar beta(int n);
    static TowerScalar monomial(const RadKey& key, const QSqrt17& coeff);

    bool is_zero() const { return terms_.empty(); }
    bool is_qsqrt17() const;
    // Valid only when is_qsqrt17().
    QSqrt17 qsqrt17_part() const;

    const std::map<RadKey, QSqrt17>& terms() const { return terms_; }

    TowerScalar operator-() const;
    TowerScalar& operator+=(const TowerScalar& o);
    TowerScalar& operator-=(const TowerScalar& o);
    friend TowerScalar operator+(TowerScalar x, const TowerScalar& y) { return x += y; }
    friend TowerScalar operator-(TowerScalar x, const TowerScalar& y) { return x -= y; }
    friend TowerScalar operator*(const TowerScalar& x, const TowerScalar& y);
    friend TowerScalar operator/(const TowerScalar& x, const TowerScalar& y);
    TowerScalar inverse() const;
    TowerScalar pow(long e) const;

    friend bool operator==(const TowerScalar& x, const TowerScalar& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const TowerScalar& x, const TowerScalar& y) { return !(x == y); }
    friend bool operator<(const TowerScalar& x, const TowerScalar& y) { return x.terms_ < y.terms_; }

    // Exact sign of the real embedding: structural zero test on the
    // canonical form, otherwise certified interval refinement.
    int sign() const;

    // Decimal rendering of the real embedding (for reports).
    std::string decimal(int digits = 50) const;
    std::string str() const;

    void insert_term(const RadKey& key, const QSqrt17& coeff);

  private:
    std::map<RadKey, QSqrt17> terms_;
};

// Exact square root of a certified-positive tower element. Supported
// shapes: squares in Q(sqrt17); elements of Q(sqrt17) (registers a square
// class); single radical monomials c*prod sqrt(q_i). Throws TowerError for
// sums it cannot root.
TowerScalar sqrt_of(const TowerScalar& x);

// Square-class reduction of q in Q(sqrt17), q > 0: returns (class
// representative, multiplier) with q = multiplier^2 * rep and rep the
// stored first-seen representative of q's square class.
struct SquareClassReduction {
    TowerScalar representative; // pure Q(sqrt17) element (or 1)
    TowerScalar multiplier;
};
SquareClassReduction reduce_square_class(const QSqrt17& q);

// Registered generator radicands (index = generator id), for serialization.
TowerScalar generator_radicand(int id);
int generator_count();

// Scalar expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?
//   atom   := rational | 'sqrt17' | 'b(' int ')' | 'sqrt(' expr ')'
//           | '(' expr ')' | '-' atom
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos) : std::runtime_error(msg), position(pos) {}
};
TowerScalar parse_scalar(const std::string& expr);
std::string serialize_scalar(const TowerScalar& x);

} // namespace ahp
