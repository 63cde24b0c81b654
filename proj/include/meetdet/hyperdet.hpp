#pragma once

/**
 * @file hyperdet.hpp
 * @brief k-way hypermatrices over exact Scalars and their determinants:
 *        the classical determinant (fraction-free Bareiss), the normalized
 *        hyperdeterminant, the first-slot-fixed variant, and coefficient-map
 *        weighted determinants evaluated either by literal enumeration or by
 *        the slice-determinant expansion.
 *
 * All operations are pure. Enumerations over permutation tuples may run on
 * several threads (capped by MEETDET_THREADS); exact Scalar addition makes
 * parallel and serial results bit-identical.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "meetdet/matrix.hpp"

namespace meetdet {

/// Permutations of {1..n}, stored as 0-based images in one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// Lexicographic unranking, rank in [0, n!).
    static Permutation unrank(int n, std::uint64_t rank);

    int n() const { return static_cast<int>(img_.size()); }
    int map(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    /// +1 or -1, by cycle decomposition.
    int sign() const;

    /// Advances to the lexicographic successor; false when wrapping back to
    /// the identity.
    bool next_lex();

    /// 1-based comma-separated images, e.g. "2,1".
    std::string one_line() const;
    static Permutation parse_one_line(const std::string& text);

    friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
    std::vector<int> img_;
};

std::uint64_t factorial(int n);

/// Refuse enumerations beyond this many terms unless forced.
inline constexpr std::uint64_t kBruteForceGuard = 100'000'000;

/// (n!)^p, guarded; throws GuardExceeded when above the guard and not forced.
std::uint64_t guarded_tuple_count(int n, int p, bool force);

class Hypermatrix {
public:
    /// Zero-filled n^k array; requires n >= 1, k >= 2.
    Hypermatrix(int n, int k);
    static Hypermatrix from_entries(int n, int k, std::vector<Scalar> entries);

    int n() const { return n_; }
    int k() const { return k_; }
    std::uint64_t size() const { return e_.size(); }

    /// Lexicographic flat offset of a 0-based multi-index (last index fastest).
    std::uint64_t offset(std::span<const int> idx) const;
    Scalar& at(std::span<const int> idx) { return e_[offset(idx)]; }
    const Scalar& at(std::span<const int> idx) const { return e_[offset(idx)]; }
    Scalar& flat(std::uint64_t off) { return e_[off]; }
    const Scalar& flat(std::uint64_t off) const { return e_[off]; }

    friend bool operator==(const Hypermatrix& a, const Hypermatrix& b) {
        return a.n_ == b.n_ && a.k_ == b.k_ && a.e_ == b.e_;
    }

private:
    int n_, k_;
    std::vector<Scalar> e_;
};

/// Coefficient map on (k-2)-tuples of permutations. The built-in kinds both
/// return 1 on the empty tuple, so every weighted determinant degrades to the
/// classical one at k = 2.
class FMap {
public:
    enum class Type { SignProduct, ConstantOne, Table };
    using Table_t = std::map<std::vector<Permutation>, Scalar>;

    static FMap sign_product(int arity);
    static FMap constant_one(int arity);
    static FMap table(int arity, Table_t entries, Scalar default_value);

    Type type() const { return type_; }
    int arity() const { return arity_; }
    Scalar operator()(std::span<const Permutation> sigmas) const;

    const Table_t& entries() const { return entries_; }
    const Scalar& default_value() const { return default_; }

private:
    FMap(Type t, int arity) : type_(t), arity_(arity) {
        if (arity < 0) throw ArityMismatch("coefficient-map arity cannot be negative");
    }
    Type type_;
    int arity_;
    Table_t entries_;
    Scalar default_;
};

/// Exact determinant by fraction-free Bareiss elimination with
/// first-nonzero-pivot row swaps; valid over every Scalar variant.
Scalar det(const ScalarMatrix& m);

/// Alternating sum over all k-tuples of permutations, divided by n!.
/// Throws ScalarNotDivisible when the entries are integers and n! does not
/// divide the raw sum.
Scalar cayley_det(const Hypermatrix& m, bool force = false);

/// Alternating sum with the first permutation pinned to the identity;
/// nonvanishing also for odd k.
Scalar det1(const Hypermatrix& m, bool force = false);

/// Literal enumeration of all (k-1)-tuples (sigma_2..sigma_k):
/// sum of sign(sigma_2) * f(sigma_3..sigma_k) * prod_i M[i, sigma_2(i), ...].
Scalar fdet_bruteforce(const Hypermatrix& m, const FMap& f, bool force = false);

/// The n x n matrix A[i][j] = M[i, j, sigma_3(i), ..., sigma_k(i)].
ScalarMatrix slice(const Hypermatrix& m, std::span<const Permutation> sigmas);

/// Same value as fdet_bruteforce via (n!)^(k-2) slice determinants.
Scalar fdet_expansion(const Hypermatrix& m, const FMap& f, bool force = false);

/// Contraction of g against the second index:
/// (g.M)[i_1, i_2, ...] = sum_j g[i_2][j] * M[i_1, j, i_3, ...].
Hypermatrix group_action(const ScalarMatrix& g, const Hypermatrix& m);

/// Term counts reported by the CLI for each evaluation route.
std::uint64_t bruteforce_term_count(int n, int k);
std::uint64_t expansion_term_count(int n, int k);

} // namespace meetdet
