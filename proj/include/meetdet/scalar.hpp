#pragma once

/**
 * @file scalar.hpp
 * @brief Exact commutative-ring scalars: big integers, big rationals, and
 *        sparse multivariate polynomials with rational coefficients.
 *
 * A Scalar is a tagged union over the coercion chain
 * Integer -> Rational -> Polynomial; mixed operations promote to the more
 * general variant. All arithmetic is exact, values are immutable once built,
 * and canonical text printing is deterministic (graded-lex monomial order),
 * so equal values always print identically.
 */

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "meetdet/errors.hpp"

namespace meetdet {

using Int = mpz_class;
using Rat = mpq_class;

/// Exponent map, indeterminate name -> positive exponent. Empty map = 1.
using Monomial = std::map<std::string, unsigned>;

unsigned monomial_degree(const Monomial& m);

/// Three-way graded-lex comparison: total degree first, ties broken by the
/// exponents at the alphabetically first differing name (higher wins).
int monomial_compare(const Monomial& a, const Monomial& b);

/// Orders monomials descending, so map iteration equals print order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_compare(a, b) > 0;
    }
};

/// Names accepted for indeterminates: [A-Za-z_][A-Za-z0-9_()]*
bool is_valid_indeterminate_name(std::string_view name);

/// Sparse multivariate polynomial over the rationals. Never stores a zero
/// coefficient; the zero polynomial is the empty term map.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rat, MonomialOrder>;

    Polynomial() = default;
    explicit Polynomial(const Rat& constant);
    static Polynomial variable(const std::string& name);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // requires is_constant()

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Exact quotient; throws DivisionNotExact when b does not divide *this.
    Polynomial exact_div(const Polynomial& b) const;

    std::string str() const;

private:
    void add_term(const Monomial& m, const Rat& c);
    TermMap terms_;
};

class Scalar {
public:
    enum class Kind { Integer, Rational, Polynomial };

    Scalar() : v_(Int(0)) {}
    Scalar(long v) : v_(Int(v)) {}
    Scalar(int v) : v_(Int(v)) {}
    explicit Scalar(Int v) : v_(std::move(v)) {}
    explicit Scalar(Rat v);
    explicit Scalar(Polynomial p) : v_(std::move(p)) {}

    static Scalar rational(const Int& num, const Int& den);
    static Scalar variable(const std::string& name);

    Kind kind() const { return static_cast<Kind>(v_.index()); }
    bool is_zero() const;
    bool is_one() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    /// Mathematical equality across variants (2/4 == 1/2, constant poly == its constant).
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Exact quotient q with q*b == *this.
    /// Throws DivisionByZero when b is zero, DivisionNotExact otherwise.
    Scalar exact_div(const Scalar& b) const;

    Scalar pow(unsigned e) const;

    /// Replaces bound indeterminates; unbound ones stay symbolic.
    Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

    /// Canonical text: integers `-?[0-9]+`, rationals `p/q`, polynomials as
    /// graded-lex ordered `+`/`-` separated terms like `3*x^2*y - 1/2`.
    std::string str() const;

    /// Inverse of str(); accepts any canonical output plus flexible spacing.
    static Scalar parse(std::string_view text);

    // Variant accessors; the kind must match.
    const Int& as_int() const { return std::get<Int>(v_); }
    const Rat& as_rat() const { return std::get<Rat>(v_); }
    const Polynomial& as_poly() const { return std::get<Polynomial>(v_); }

private:
    std::variant<Int, Rat, Polynomial> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace meetdet
