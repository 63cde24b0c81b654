#pragma once

/**
 * @file closedform.hpp
 * @brief Moebius-inversion transforms and the closed-form evaluators for
 *        determinants of meet hypermatrices: the whole-lattice product
 *        formula, its weighted-determinant extension, meet-closed and
 *        factor-closed subset formulas, and the general-subset minor
 *        expansions (Cauchy-Binet style) with their weighted analogue.
 *
 * Every evaluator has the literal enumeration of the same hypermatrix as its
 * oracle; equality is exact, never approximate.
 */

#include <memory>
#include <span>
#include <vector>

#include "meetdet/hyperdet.hpp"
#include "meetdet/lattice.hpp"

namespace meetdet {

/// Family {F_x}_{x in X} of Scalar functions on lattice elements together
/// with a grounding x -> z_x <= x. F_x(z) defaults to 0 where unset; only
/// values at z <= x are ever read by the evaluators.
struct GroundedFunction {
    std::shared_ptr<const MeetSemilattice> lattice;
    std::vector<int> X;                  // ordered, distinct element indices
    std::vector<std::vector<Scalar>> F;  // F[i][z], one row per X[i], length n
    std::vector<int> z_of;               // z_of[i] <= X[i]

    static GroundedFunction make(std::shared_ptr<const MeetSemilattice> lattice,
                                 std::vector<int> X, std::vector<int> z_of,
                                 std::vector<std::vector<Scalar>> F);

    int size() const { return static_cast<int>(X.size()); }
    const Scalar& value(int xi, int z) const { return F[xi][z]; }
    bool all_grounded_at_x() const;
    bool uniform_F() const;
};

/// F(x) = sum_{y <= x} f(y).
std::vector<Scalar> zeta_transform(const Poset& p, std::span<const Scalar> f);

/// f(x) = sum_y mu(y, x) F(y); inverse of zeta_transform.
std::vector<Scalar> mobius_transform(const Poset& p, std::span<const Scalar> F);

/// The order-k hypermatrix with entry(i_1..i_k) =
/// F_{x_{i_1}}(z_{x_{i_1}} ^ x_{i_2} ^ ... ^ x_{i_k}).
Hypermatrix build_meet_hypermatrix(const GroundedFunction& gf, int k);

/// Whole-lattice product formula, k = 2: prod_x f_x(x) when every z_x = x,
/// exactly 0 otherwise (the branch is structural, not numeric).
/// Requires X = L as a set; throws IndexSetNotWholeLattice.
Scalar lindstrom_det(const GroundedFunction& gf);

/// Weighted version: f(Id,..,Id) * prod_x f_x(x) when every z_x = x, else 0.
Scalar lindstrom_fdet(const GroundedFunction& gf, int k, const FMap& fmap);

/// Redistribution of f over an ordered meet-closed subset: hat(y_i) sums f
/// over the elements whose first upper bound in the listing is y_i.
/// The listing must be a linear extension of the subset.
std::vector<Scalar> hat_transform(const MeetSemilattice& sl, std::span<const int> S,
                                  std::span<const Scalar> f);

/// Meet-closed subset formula: f(Id,..,Id) * prod_i hat(f_{y_i})(y_i), with
/// each f_{y_i} the Moebius transform of F_{y_i} over the ambient lattice.
/// Requires z_y = y for every y and X meet-closed.
Scalar meet_closed_fdet(const GroundedFunction& gf, int k, const FMap& fmap);

/// Factor-closed subset formula: f(Id,..,Id) * prod_x f_x(x) with f_x
/// computed within the subset (where hat(f) = f); 0 when some z_x < x.
Scalar factor_closed_fdet(const GroundedFunction& gf, int k, const FMap& fmap);

/// The listing of the ideal closure used by the expansions: X in its given
/// order, then the remaining closure elements ascending.
std::vector<int> closure_listing(const GroundedFunction& gf);

/// C[x][y] = f_x(y) when y <= z_x, else 0; columns follow closure_listing.
ScalarMatrix c_matrix(const GroundedFunction& gf);

/// Sum over n-element subsets of the closure of products of paired minors
/// det(C[:,K]) * det(zeta(K, X)); equals det(build_meet_hypermatrix(gf, 2)).
Scalar li_expansion_det(const GroundedFunction& gf);

/// Weighted general-subset expansion; equals
/// fdet_bruteforce(build_meet_hypermatrix(gf, k), fmap) exactly.
Scalar ligen_fdet(const GroundedFunction& gf, int k, const FMap& fmap, bool force = false);

/// ligen with a single shared F pulled out of the inner weighted
/// determinants as prod_i f(x_{k_i}); requires all F_x identical.
Scalar genhauk_fdet(const GroundedFunction& gf, int k, const FMap& fmap, bool force = false);

/// Inner-determinant count of the subset expansions, for reporting.
std::uint64_t subset_expansion_term_count(const GroundedFunction& gf, int k);

// Symbolic instance builders backing the paper-examples command and the
// golden tests.

/// F_x(z) = indeterminate `F<x>(<z>)` for z <= x, 0 elsewhere; z_x = x.
GroundedFunction symbolic_gf_in_F(std::shared_ptr<const MeetSemilattice> lattice,
                                  std::vector<int> X);

/// F_x = zeta transform of fresh indeterminates `f<x>(<y>)`, so Moebius
/// inversion recovers the f symbols literally; z_x = x.
GroundedFunction symbolic_gf_in_f(std::shared_ptr<const MeetSemilattice> lattice,
                                  std::vector<int> X);

/// Table map with one indeterminate per permutation tuple, named
/// `Frak(<p1>_<p2>_...)` with each permutation as concatenated 1-based
/// images (requires n <= 9).
FMap symbolic_fmap(int n, int arity);

} // namespace meetdet
