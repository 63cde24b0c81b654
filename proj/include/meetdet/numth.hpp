#pragma once

/**
 * @file numth.hpp
 * @brief Divisibility specialization: GCD semilattices, Euler's totient,
 *        Dirichlet convolution, and GCD hypermatrices.
 *
 * The classical one-argument Moebius function is obtained as the lattice
 * Moebius value mu(1, d) on a divisor-closed ground set rather than
 * implemented separately. Factorization is trial division; inputs are desk
 * scale.
 */

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "meetdet/closedform.hpp"

namespace meetdet {

long euler_phi(long n);

/// Smallest gcd-closed superset, ascending.
std::vector<long> gcd_closure(std::vector<long> S);

/// Smallest divisor-closed superset, ascending.
std::vector<long> divisor_closure(std::vector<long> S);

struct DivisorSemilattice {
    std::shared_ptr<const MeetSemilattice> lattice;
    std::vector<long> values; // values[i] is the integer at element i, ascending
    int index_of(long v) const;
};

/// Poset a <= b iff a | b, meet = gcd. S must be nonempty and gcd-closed;
/// throws NotGcdClosed with a witness pair otherwise.
DivisorSemilattice divisor_semilattice(std::vector<long> S);

/// Scalar-valued function on 1..bound.
class ArithmeticFunction {
public:
    ArithmeticFunction(long bound, std::vector<Scalar> values);
    /// Built-ins: id, one, phi, mu, tau, sigma.
    static ArithmeticFunction named(const std::string& name, long bound);

    long bound() const { return bound_; }
    const Scalar& operator()(long n) const;

private:
    long bound_;
    std::vector<Scalar> values_;
};

/// mu(1), .., mu(N) read off the divisor lattice of {1..N}.
std::vector<Scalar> classical_mobius(long N);

/// (f * g)(n) = sum_{d | n} f(d) g(n/d).
Scalar dirichlet_convolution(const ArithmeticFunction& f, const ArithmeticFunction& g, long n);

/// Left and right sides of the gcd-convolution identity: the pair
/// ( (mu * (f o gcd_m))(n),  m == n ? (f * mu)(n) : 0 ).
std::pair<Scalar, Scalar> cesaro_check(const ArithmeticFunction& f, long m, long n);

/// entry(i_1..i_k) = F(gcd(S[i_1], .., S[i_k])).
Hypermatrix gcd_hypermatrix(std::span<const long> S, int k, const ArithmeticFunction& F);

} // namespace meetdet
